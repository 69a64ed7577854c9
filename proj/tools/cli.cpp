// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "cocirc/connectivity.hpp"
#include "cocirc/constructions.hpp"
#include "cocirc/error.hpp"
#include "cocirc/graphic.hpp"
#include "cocirc/json_io.hpp"
#include "cocirc/matroid.hpp"
#include "cocirc/minors.hpp"
#include "cocirc/structures.hpp"
#include "cocirc/theorem.hpp"
#include "cocirc/verify.hpp"

namespace {

using nlohmann::json;
using namespace cocirc;

struct CommonOpts {
  std::string format = "text";
  uint64_t seed = 2026;
  int cap = 64;
  int jobs = 1;
};

void add_common(CLI::App* cmd, CommonOpts* c) {
  cmd->add_option("--format", c->format, "output format")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();
  cmd->add_option("--seed", c->seed, "seed for randomized constructions")
      ->capture_default_str();
  cmd->add_option("--cap", c->cap, "listing cap for enumerated output")
      ->capture_default_str();
  cmd->add_option("--jobs", c->jobs, "worker threads where supported")
      ->capture_default_str();
}

std::string set_str(const Matroid& m, ElementSet s) {
  std::string out = "{";
  bool first = true;
  for (const std::string& l : m.labels_of(s)) {
    if (!first) out += ",";
    out += l;
    first = false;
  }
  return out + "}";
}

json set_json(const Matroid& m, ElementSet s) {
  json a = json::array();
  for (const std::string& l : m.labels_of(s)) a.push_back(l);
  return a;
}

bool looks_like_graph_file(const std::string& path) {
  if (path.size() > 6 && path.substr(path.size() - 6) == ".graph") return true;
  std::ifstream in(path);
  std::string tok;
  in >> tok;
  return tok == "vertices";
}

Matroid load_matroid_any(const std::string& path) {
  if (looks_like_graph_file(path)) return graphic(load_graph_file(path));
  return load_matroid_file(path, Validation::kChecked);
}

// A file path, or one of the named constructions.
Matroid resolve_matroid(const std::string& spec, uint64_t seed) {
  if (std::filesystem::exists(spec)) return load_matroid_any(spec);
  int a = 0, b = 0;
  if (std::sscanf(spec.c_str(), "U(%d,%d)", &a, &b) == 2) return uniform(a, b);
  if (std::sscanf(spec.c_str(), "M(W%d)", &a) == 1)
    return graphic(wheel_graph(a));
  if (spec == "M(K4)") return graphic(complete_graph(4));
  if (spec == "M(K5)") return graphic(complete_graph(5));
  if (spec == "M(K5-e)") return k5_minus_e();
  if (spec == "M(K3,3)") {
    Graph g;
    g.num_vertices = 6;
    for (int u = 0; u < 3; ++u)
      for (int v = 3; v < 6; ++v)
        g.edges.push_back({u, v, std::to_string(u) + "-" + std::to_string(v)});
    return graphic(g);
  }
  if (std::sscanf(spec.c_str(), "theta(%d)", &a) == 1) return theta(a, seed);
  if (std::sscanf(spec.c_str(), "theta_double(%d)", &a) == 1)
    return theta_double(a, seed);
  raise(ErrorCode::kBadParams,
        "not a file or a known construction name: " + spec);
}

Graph resolve_graph(const std::string& spec) {
  if (std::filesystem::exists(spec)) return load_graph_file(spec);
  int a = 0;
  if (std::sscanf(spec.c_str(), "M(K%d)", &a) == 1) return complete_graph(a);
  if (std::sscanf(spec.c_str(), "M(W%d)", &a) == 1) return wheel_graph(a);
  raise(ErrorCode::kBadParams,
        "not a graph file or a complete/wheel graph name: " + spec);
}

// ----- build --------------------------------------------------------------

int cmd_build(const std::string& out_dir) {
  namespace fs = std::filesystem;
  fs::create_directories(out_dir);
  auto write = [&](const std::string& name, const std::string& text) {
    std::ofstream(fs::path(out_dir) / name) << text;
    std::printf("wrote %s/%s\n", out_dir.c_str(), name.c_str());
  };
  write("fig1.graph", serialize_graph(fig1_graph()));
  write("fig2.graph", serialize_graph(k5_minus_e_graph()));
  save_json_file((fs::path(out_dir) / "u24.json").string(),
                 matroid_to_json(uniform(2, 4)));
  std::printf("wrote %s/u24.json\n", out_dir.c_str());
  save_json_file((fs::path(out_dir) / "k4.json").string(),
                 matroid_to_json(graphic(complete_graph(4))));
  std::printf("wrote %s/k4.json\n", out_dir.c_str());
  return 0;
}

// ----- inspect --------------------------------------------------------------

int cmd_inspect(const std::string& file, const CommonOpts& c) {
  Matroid m = load_matroid_any(file);
  RankTable rt(m);
  auto circs = circuits(m);
  auto cocircs = cocircuits(m);
  auto segs = segments(m);
  auto cosegs = cosegments(m);
  bool three = is_3_connected(rt);
  std::optional<Separation> sep;
  if (!three) sep = find_separation_below(rt, 3);

  if (c.format == "json") {
    json j;
    j["file"] = file;
    j["n"] = m.n;
    j["labels"] = m.labels;
    j["rank"] = m.rank();
    j["three_connected"] = three;
    if (sep) {
      j["separation"] = {{"side", set_json(m, sep->x)},
                         {"order", sep->k},
                         {"exact", sep->exact}};
    }
    auto dump = [&](const std::vector<ElementSet>& v) {
      json a = json::array();
      int shown = 0;
      for (ElementSet s : v) {
        if (shown++ >= c.cap) break;
        a.push_back(set_json(m, s));
      }
      return a;
    };
    j["circuit_count"] = circs.size();
    j["circuits"] = dump(circs);
    j["cocircuit_count"] = cocircs.size();
    j["cocircuits"] = dump(cocircs);
    j["segments"] = dump(segs);
    j["cosegments"] = dump(cosegs);
    j["fans"] = fans(m).size();
    j["seg_coseg_pairs"] = seg_coseg_pairs(m).size();
    std::printf("%s\n", j.dump(2).c_str());
    return 0;
  }

  std::printf("file: %s\n", file.c_str());
  std::printf("elements: %d  rank: %d\n", m.n, m.rank());
  {
    std::string line = three ? "3-connected: yes" : "3-connected: no";
    if (sep) {
      line += "; separation: " + set_str(m, sep->x) + " order " +
              std::to_string(sep->k) + (sep->exact ? " (exact)" : "");
    }
    if (!segs.empty()) {
      line += "; segments:";
      for (ElementSet s : segs) line += " " + set_str(m, s);
    }
    std::printf("%s\n", line.c_str());
  }
  auto list = [&](const char* title, const std::vector<ElementSet>& v) {
    std::printf("%s (%zu):", title, v.size());
    int shown = 0;
    for (ElementSet s : v) {
      if (shown++ >= c.cap) {
        std::printf(" ...");
        break;
      }
      std::printf(" %s", set_str(m, s).c_str());
    }
    std::printf("\n");
  };
  list("circuits", circs);
  list("cocircuits", cocircs);
  if (!cosegs.empty()) list("cosegments", cosegs);
  std::printf("fans: %zu  seg-coseg pairs: %zu  spores: %zu\n", fans(m).size(),
              seg_coseg_pairs(m).size(), spores(m).size());
  return 0;
}

// ----- detect --------------------------------------------------------------

json witness_to_json(const Matroid& m, const Matroid& n, const MinorWitness& w) {
  json j;
  j["delete"] = set_json(m, w.del);
  j["contract"] = set_json(m, w.contr);
  json iso = json::object();
  ElementSet removed = w.del | w.contr;
  for (int e = 0; e < m.n; ++e) {
    if (removed.contains(e)) continue;
    iso[m.label_of(e)] = n.label_of(w.iso[size_t(e)]);
  }
  j["iso"] = iso;
  return j;
}

int cmd_detect(const std::string& file, const std::string& minor_spec,
               const CommonOpts& c) {
  Matroid m = load_matroid_any(file);
  auto prs = seg_coseg_pairs(m);
  auto fns = fans(m);
  auto sps = spores(m);

  std::optional<Matroid> target;
  std::optional<MinorWitness> w;
  if (!minor_spec.empty()) {
    target = resolve_matroid(minor_spec, c.seed);
    w = has_minor(m, *target);
  }

  if (c.format == "json") {
    json j;
    j["file"] = file;
    json jf = json::array();
    int shown = 0;
    for (const Fan& f : fns) {
      if (shown++ >= c.cap) break;
      jf.push_back({m.label_of(f.x1), m.label_of(f.x2), m.label_of(f.x3),
                    m.label_of(f.x4)});
    }
    j["fans"] = jf;
    json jp = json::array();
    shown = 0;
    for (const SegCosegPair& p : prs) {
      if (shown++ >= c.cap) break;
      json xs = json::array(), ys = json::array();
      for (int x : p.xs) xs.push_back(m.label_of(x));
      for (int y : p.ys) ys.push_back(m.label_of(y));
      jp.push_back({{"l", set_json(m, p.l)},
                    {"lstar", set_json(m, p.lstar)},
                    {"xs", xs},
                    {"ys", ys}});
    }
    j["seg_coseg_pairs"] = jp;
    json js = json::array();
    shown = 0;
    for (const Spore& s : sps) {
      if (shown++ >= c.cap) break;
      js.push_back({{"p", set_json(m, s.p)}, {"s", m.label_of(s.s)}});
    }
    j["spores"] = js;
    if (target) {
      j["minor"] = {{"target", minor_spec}, {"present", w.has_value()}};
      if (w) j["minor"]["witness"] = witness_to_json(m, *target, *w);
    }
    std::printf("%s\n", j.dump(2).c_str());
    return 0;
  }

  std::printf("file: %s\n", file.c_str());
  std::printf("fans (%zu):", fns.size());
  int shown = 0;
  for (const Fan& f : fns) {
    if (shown++ >= c.cap) {
      std::printf(" ...");
      break;
    }
    std::printf(" (%s,%s,%s,%s)", m.label_of(f.x1).c_str(),
                m.label_of(f.x2).c_str(), m.label_of(f.x3).c_str(),
                m.label_of(f.x4).c_str());
  }
  std::printf("\n");
  std::printf("seg-coseg pairs (%zu):", prs.size());
  shown = 0;
  for (const SegCosegPair& p : prs) {
    if (shown++ >= c.cap) {
      std::printf(" ...");
      break;
    }
    std::printf(" L=%s L*=%s", set_str(m, p.l).c_str(),
                set_str(m, p.lstar).c_str());
  }
  std::printf("\n");
  std::printf("spores (%zu):", sps.size());
  shown = 0;
  for (const Spore& s : sps) {
    if (shown++ >= c.cap) {
      std::printf(" ...");
      break;
    }
    std::printf(" (%s,%s)", set_str(m, s.p).c_str(), m.label_of(s.s).c_str());
  }
  std::printf("\n");
  if (target) {
    if (w) {
      std::printf("minor %s: present; delete %s contract %s\n",
                  minor_spec.c_str(), set_str(m, w->del).c_str(),
                  set_str(m, w->contr).c_str());
    } else {
      std::printf("minor %s: absent\n", minor_spec.c_str());
    }
  }
  return 0;
}

// ----- classify --------------------------------------------------------------

json branch_to_json(const Matroid& m, const Branch& b) {
  json j;
  j["kind"] = branch_kind_name(b.kind);
  if (b.x >= 0) j["x"] = m.label_of(b.x);
  if (b.kind == BranchKind::kFan || b.kind == BranchKind::kFanDel) {
    j["fan"] = {m.label_of(b.fan.x1), m.label_of(b.fan.x2),
                m.label_of(b.fan.x3), m.label_of(b.fan.x4)};
  }
  if (b.kind == BranchKind::kSegCosegWithE ||
      b.kind == BranchKind::kSegCosegFlat) {
    j["l"] = set_json(m, b.pair.l);
    j["lstar"] = set_json(m, b.pair.lstar);
    if (b.e >= 0) j["e"] = m.label_of(b.e);
  }
  j["extras_ok"] = b.extras_ok;
  if (!b.extra_failures.empty()) j["extra_failures"] = b.extra_failures;
  if (!b.flags.empty()) j["flags"] = b.flags;
  return j;
}

std::string branch_to_text(const Matroid& m, const Branch& b) {
  std::string out = branch_kind_name(b.kind);
  if (b.x >= 0) out += " x=" + m.label_of(b.x);
  if (b.kind == BranchKind::kFan || b.kind == BranchKind::kFanDel) {
    out += " fan=(" + m.label_of(b.fan.x1) + "," + m.label_of(b.fan.x2) + "," +
           m.label_of(b.fan.x3) + "," + m.label_of(b.fan.x4) + ")";
  }
  if (b.kind == BranchKind::kSegCosegWithE ||
      b.kind == BranchKind::kSegCosegFlat) {
    out += " L=" + set_str(m, b.pair.l) + " L*=" + set_str(m, b.pair.lstar);
    if (b.e >= 0) out += " e=" + m.label_of(b.e);
  }
  if (!b.extras_ok) out += " [extras failed]";
  for (const std::string& f : b.flags) out += " [flag: " + f + "]";
  return out;
}

int cmd_classify(const std::string& host_spec, const std::string& target_spec,
                 const std::vector<std::string>& cstar_labels,
                 const std::string& x0_label, const std::string& statement,
                 bool dualize, const CommonOpts& c) {
  // Hosts beyond the exact kernel stay in graph terms.
  if (std::filesystem::exists(host_spec) && looks_like_graph_file(host_spec)) {
    Graph g = load_graph_file(host_spec);
    if (int(g.edges.size()) > ElementSet::kMaxGroundSize) {
      if (dualize || statement != "main") {
        raise(ErrorCode::kTooLarge,
              "graph host beyond the exact kernel supports only --statement "
              "main without --dual");
      }
      Graph h = resolve_graph(target_spec);
      GraphTheoremVerdict v =
          classify_main_graphic(g, h, cstar_labels, x0_label, false);
      if (c.format == "json") {
        json j;
        j["host"] = host_spec;
        j["target"] = target_spec;
        j["branches"] = json::array();
        for (const GraphBranch& b : v.branches) {
          json bj;
          bj["kind"] = branch_kind_name(b.kind);
          if (!b.x.empty()) bj["x"] = b.x;
          if (b.kind == BranchKind::kFan) {
            bj["fan"] = {b.fan.x1, b.fan.x2, b.fan.x3, b.fan.x4};
          }
          bj["extras_ok"] = b.extras_ok;
          if (!b.flags.empty()) bj["flags"] = b.flags;
          j["branches"].push_back(bj);
        }
        std::printf("%s\n", j.dump(2).c_str());
      } else {
        std::printf("host: %s (graph fast path), target: %s\n",
                    host_spec.c_str(), target_spec.c_str());
        for (const GraphBranch& b : v.branches) {
          std::string line = branch_kind_name(b.kind);
          if (!b.x.empty()) line += " x=" + b.x;
          if (b.kind == BranchKind::kFan) {
            line += " fan=(" + b.fan.x1 + "," + b.fan.x2 + "," + b.fan.x3 +
                    "," + b.fan.x4 + ")";
          }
          if (!b.extras_ok) line += " [extras failed]";
          std::printf("branch: %s\n", line.c_str());
        }
      }
      return v.any() ? 0 : 1;
    }
  }

  Matroid m = resolve_matroid(host_spec, c.seed);
  if (dualize) m = dual(m);
  Matroid n = resolve_matroid(target_spec, c.seed);
  ElementSet cstar = m.set_by_labels(cstar_labels);
  int x0 = m.index_of_label(x0_label);
  MinorSearch engine(n);
  TheoremVerdict v;
  if (statement == "main") {
    v = classify_main(m, n, cstar, x0, &engine, false);
  } else if (statement == "contract") {
    v = classify_thm1(m, n, cstar, x0, &engine, false);
  } else {
    v = classify_dual(m, n, cstar, x0, &engine, false);
  }

  if (c.format == "json") {
    json j;
    j["host"] = host_spec;
    j["dualized"] = dualize;
    j["target"] = target_spec;
    j["set"] = set_json(m, cstar);
    j["x0"] = x0_label;
    j["statement"] = statement;
    j["branches"] = json::array();
    for (const Branch& b : v.branches) j["branches"].push_back(branch_to_json(m, b));
    std::printf("%s\n", j.dump(2).c_str());
  } else {
    std::printf("host: %s%s (%d elements, rank %d), target: %s\n",
                host_spec.c_str(), dualize ? " (dualized)" : "", m.n, m.rank(),
                target_spec.c_str());
    std::printf("set: %s  x0: %s  statement: %s\n", set_str(m, cstar).c_str(),
                x0_label.c_str(), statement.c_str());
    for (const Branch& b : v.branches) {
      std::printf("branch: %s\n", branch_to_text(m, b).c_str());
    }
  }
  return v.any() ? 0 : 1;
}

// ----- sweep --------------------------------------------------------------

int cmd_sweep(bool first_only, bool with_suites, const CommonOpts& c) {
  auto cat = default_catalogue(c.seed);
  auto targets = default_targets();
  SweepReport rep = sweep_catalogue(cat, targets, c.jobs, first_only);

  bool suites_pass = true;
  std::vector<verify::SuiteResult> suites;
  if (with_suites) {
    verify::Options vo;
    vo.seed = c.seed;
    vo.jobs = c.jobs;
    vo.fixture_dir = "";
    for (const char* s : {"sec2", "sec3", "sec4"}) {
      suites.push_back(verify::run_suite(s, vo));
      suites_pass = suites_pass && suites.back().pass;
    }
  }

  bool all_ok = rep.violations.empty() && suites_pass;
  for (const SweepInstance& inst : rep.instances) all_ok = all_ok && inst.ok;

  if (c.format == "json") {
    json j;
    j["catalogue"] = cat.size();
    j["skipped"] = rep.skipped;
    j["instance_count"] = rep.instance_count;
    j["wall_ms"] = rep.wall_ms;
    j["histogram"] = json::object();
    for (const auto& [k, v] : rep.histogram) j["histogram"][k] = v;
    j["violations"] = rep.violations;
    j["flags"] = rep.flags;
    j["instances"] = json::array();
    for (const SweepInstance& inst : rep.instances) {
      json kinds = json::array();
      for (const Branch& b : inst.branches) kinds.push_back(branch_kind_name(b.kind));
      j["instances"].push_back({{"m", inst.m_name},
                                {"n", inst.n_name},
                                {"cstar", inst.cstar.elements()},
                                {"valid_x0", inst.valid_x0},
                                {"branches", kinds},
                                {"ok", inst.ok},
                                {"ms", inst.ms}});
    }
    if (with_suites) {
      json js = json::object();
      for (const verify::SuiteResult& s : suites) js[s.suite] = s.pass;
      j["property_suites"] = js;
    }
    j["pass"] = all_ok;
    std::printf("%s\n", j.dump(2).c_str());
  } else {
    std::printf("catalogue: %zu entries (%zu skipped as not 3-connected)\n",
                cat.size(), rep.skipped.size());
    std::printf("instances: %lld in %.0f ms\n",
                static_cast<long long>(rep.instance_count), rep.wall_ms);
    std::printf("branch histogram:");
    for (const auto& [k, v] : rep.histogram) std::printf(" %s:%lld", k.c_str(), static_cast<long long>(v));
    std::printf("\n");
    std::printf("violations: %zu\n", rep.violations.size());
    for (const std::string& s : rep.violations) std::printf("  %s\n", s.c_str());
    if (!rep.flags.empty()) {
      std::printf("flags: %zu\n", rep.flags.size());
      for (const std::string& s : rep.flags) std::printf("  %s\n", s.c_str());
    }
    for (const verify::SuiteResult& s : suites) {
      std::printf("property suite %s: %s\n", s.suite.c_str(),
                  s.pass ? "pass" : "FAIL");
    }
  }
  return all_ok ? 0 : 1;
}

// ----- verify-paper --------------------------------------------------------------

int cmd_verify_paper(const std::vector<std::string>& only,
                     const std::string& fixtures, const CommonOpts& c) {
  verify::Options vo;
  vo.seed = c.seed;
  vo.jobs = c.jobs;
  vo.fixture_dir = fixtures;
  std::vector<std::string> names =
      only.empty() ? verify::suite_names() : only;

  std::vector<verify::SuiteResult> results;
  results.reserve(names.size());
  for (const std::string& name : names) {
    results.push_back(verify::run_suite(name, vo));
  }

  bool all = true;
  const verify::CheckResult* first_fail = nullptr;
  const verify::SuiteResult* first_fail_suite = nullptr;
  for (const verify::SuiteResult& r : results) {
    for (const verify::CheckResult& ck : r.checks) {
      if (!ck.pass && first_fail == nullptr) {
        first_fail = &ck;
        first_fail_suite = &r;
      }
    }
    all = all && r.pass;
  }

  if (c.format == "json") {
    json j;
    j["suites"] = json::array();
    for (const verify::SuiteResult& r : results) {
      json s;
      s["suite"] = r.suite;
      s["pass"] = r.pass;
      s["ms"] = r.ms;
      s["checks"] = json::array();
      for (const verify::CheckResult& ck : r.checks) {
        s["checks"].push_back(
            {{"name", ck.name}, {"pass", ck.pass}, {"detail", ck.detail}});
      }
      j["suites"].push_back(s);
    }
    j["pass"] = all;
    std::printf("%s\n", j.dump(2).c_str());
  } else {
    for (const verify::SuiteResult& r : results) {
      for (const verify::CheckResult& ck : r.checks) {
        std::printf("[%s] %s: %s%s%s\n", ck.pass ? "PASS" : "FAIL",
                    r.suite.c_str(), ck.name.c_str(),
                    ck.detail.empty() ? "" : " -- ", ck.detail.c_str());
      }
      std::printf("== %s: %s (%.0f ms)\n", r.suite.c_str(),
                  r.pass ? "PASS" : "FAIL", r.ms);
    }
    std::printf("== verify-paper: %s\n", all ? "PASS" : "FAIL");
  }
  if (!all && first_fail != nullptr) {
    std::fprintf(stderr, "first failing check: %s: %s\n",
                 first_fail_suite->suite.c_str(), first_fail->name.c_str());
  }
  return all ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"matroid cocircuit-contraction laboratory"};
  app.require_subcommand(1);

  std::string build_out = "fixtures";
  CLI::App* build = app.add_subcommand("build", "write the shipped fixture files");
  build->add_option("--out", build_out, "output directory")->capture_default_str();

  CommonOpts insp_c;
  std::string insp_file;
  CLI::App* insp = app.add_subcommand("inspect", "rank, connectivity, circuits, structures");
  insp->add_option("file", insp_file, "matroid JSON or graph file")->required();
  add_common(insp, &insp_c);

  CommonOpts det_c;
  std::string det_file, det_minor;
  CLI::App* det = app.add_subcommand("detect", "fans, segment-cosegment pairs, spores, minors");
  det->add_option("file", det_file, "matroid JSON or graph file")->required();
  det->add_option("--minor", det_minor, "target matroid (file or name) to search for");
  add_common(det, &det_c);

  CommonOpts cls_c;
  std::string cls_host, cls_target, cls_x0, cls_statement = "main";
  std::vector<std::string> cls_cstar;
  bool cls_dual = false;
  CLI::App* cls = app.add_subcommand("classify", "run the branch classification on an instance");
  cls->add_option("host", cls_host, "host matroid (file or name)")->required();
  cls->add_option("--target", cls_target, "pattern matroid (file or name)")->required();
  cls->add_option("--cstar", cls_cstar, "cocircuit labels (comma separated)")
      ->required()
      ->delimiter(',');
  cls->add_option("--x0", cls_x0, "starting element label")->required();
  cls->add_option("--statement", cls_statement,
                  "main (all four branches), contract, or delete")
      ->check(CLI::IsMember({"main", "contract", "delete"}))
      ->capture_default_str();
  cls->add_flag("--dual", cls_dual, "dualize the host after loading");
  add_common(cls, &cls_c);

  CommonOpts sw_c;
  bool sw_first = false, sw_no_suites = false;
  CLI::App* sw = app.add_subcommand("sweep", "classify the whole catalogue and report");
  sw->add_flag("--first-only", sw_first, "stop at the first branch per instance");
  sw->add_flag("--no-suites", sw_no_suites, "skip the property suites in the report");
  add_common(sw, &sw_c);

  CommonOpts vp_c;
  std::vector<std::string> vp_only;
  std::string vp_fixtures = "fixtures";
  CLI::App* vp = app.add_subcommand("verify-paper", "run every named check suite");
  vp->add_option("--only", vp_only, "run only these suites")->delimiter(',');
  vp->add_option("--fixtures", vp_fixtures,
                 "fixture directory (empty string: built-ins only)")
      ->capture_default_str();
  add_common(vp, &vp_c);

  try {
    app.parse(argc, argv);
    if (build->parsed()) return cmd_build(build_out);
    if (insp->parsed()) return cmd_inspect(insp_file, insp_c);
    if (det->parsed()) return cmd_detect(det_file, det_minor, det_c);
    if (cls->parsed())
      return cmd_classify(cls_host, cls_target, cls_cstar, cls_x0,
                          cls_statement, cls_dual, cls_c);
    if (sw->parsed()) return cmd_sweep(sw_first, !sw_no_suites, sw_c);
    if (vp->parsed()) return cmd_verify_paper(vp_only, vp_fixtures, vp_c);
    return 2;
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  } catch (const cocirc::Error& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    switch (e.code()) {
      case ErrorCode::kParse:
      case ErrorCode::kValidation:
      case ErrorCode::kBadParams:
        return 2;
      default:
        return 1;
    }
  }
}
