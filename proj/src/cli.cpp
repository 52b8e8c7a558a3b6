#include "tcore/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <functional>
#include <ostream>
#include <sstream>

#include "tcore/cyclotomic.hpp"
#include "tcore/gbg.hpp"
#include "tcore/identities.hpp"
#include "tcore/littlewood.hpp"
#include "tcore/partition.hpp"
#include "tcore/qseries.hpp"

namespace tcore {

namespace {

using nlohmann::json;

struct RunConfig {
  std::int64_t order = 60;
  std::int64_t budget = 10'000'000;
  std::int64_t max_norm = 30;
  std::string format = "table";
  bool json_flag = false;
  int jobs = 1;

  bool as_json() const { return json_flag || format == "json"; }
};

json to_json(const CycInt& v) { return {{"modulus", v.modulus()}, {"coeffs", v.coeffs()}, {"pretty", v.pretty()}}; }

json to_json(const Partition& p) { return {{"parts", std::vector<int>(p.parts().begin(), p.parts().end())}}; }

json to_json(const NVector& n) { return n.coords; }

std::vector<int> parse_ints(const std::string& text) {
  std::vector<int> out;
  std::string token;
  std::istringstream in(text);
  while (std::getline(in, token, ',')) {
    std::istringstream words(token);
    std::string w;
    while (words >> w) {
      std::size_t used = 0;
      int v = 0;
      try {
        v = std::stoi(w, &used);
      } catch (const std::exception&) {
        throw ParseError("not an integer: '" + w + "'");
      }
      if (used != w.size()) throw ParseError("not an integer: '" + w + "'");
      out.push_back(v);
    }
  }
  return out;
}

NVector parse_nvec(const std::string& text) {
  auto ints = parse_ints(text);
  return NVector(std::vector<std::int64_t>(ints.begin(), ints.end()));
}

std::string scalar_text(const json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_object() && v.contains("pretty")) return v["pretty"].get<std::string>();
  if (v.is_object() && v.contains("parts")) {
    std::string s = "(";
    for (std::size_t i = 0; i < v["parts"].size(); ++i) s += (i ? "," : "") + v["parts"][i].dump();
    return s + ")";
  }
  if (v.is_array()) {
    std::string s = "[";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + scalar_text(v[i]);
    return s + "]";
  }
  return v.dump();
}

// Plain-text rendering: scalars as "key: value", arrays of records as one line per record.
void render_table(const json& doc, std::ostream& out, const std::string& indent = "") {
  for (const auto& [key, value] : doc.items()) {
    if (value.is_array() && !value.empty() && value[0].is_object() && !value[0].contains("parts") &&
        !value[0].contains("pretty")) {
      out << indent << key << ":\n";
      for (const auto& row : value) {
        out << indent << "  ";
        bool first = true;
        for (const auto& [k, v] : row.items()) {
          out << (first ? "" : "  ") << k << "=" << scalar_text(v);
          first = false;
        }
        out << "\n";
      }
    } else if (value.is_object() && !value.contains("parts") && !value.contains("pretty")) {
      out << indent << key << ":\n";
      render_table(value, out, indent + "  ");
    } else {
      out << indent << key << ": " << scalar_text(value) << "\n";
    }
  }
}

void emit(const json& doc, const RunConfig& cfg, std::ostream& out) {
  if (cfg.as_json()) {
    out << doc.dump(2) << "\n";
  } else {
    render_table(doc, out);
  }
}

json report_json(const IdentityReport& r) {
  json j = {{"id", r.id}, {"order", r.order}, {"holds", r.holds}, {"detail", r.detail}};
  j["first_discrepancy"] = r.first_discrepancy ? json(*r.first_discrepancy) : json(nullptr);
  return j;
}

// ---- property sweeps used by verify-all ----

struct Sweep {
  std::string name;
  std::int64_t checked = 0;
  std::int64_t failures = 0;
};

Sweep sweep_gks(std::int64_t max_norm) {
  Sweep s{"gks_round_trip"};
  for (int t = 2; t <= 5; ++t) {
    for (const auto& e : t_cores_below(t, max_norm + 1)) {
      ++s.checked;
      if (core_to_nvec(e.core, t) != e.n || nvec_to_core(e.n) != e.core || norm_from_nvec(e.n) != e.core.norm()) {
        ++s.failures;
      }
    }
  }
  return s;
}

Sweep sweep_theorem_1_1(std::int64_t max_norm) {
  Sweep s{"gbg_formula_vs_direct"};
  for (int t = 2; t <= 5; ++t) {
    const auto cores = t_cores_below(t, std::min<std::int64_t>(max_norm, 25) + 1);
    for (int m = 2; m <= 5; ++m) {
      if (gcd(m, t) != 1) continue;
      for (const auto& e : cores) {
        ++s.checked;
        if (gbg_formula(e.n, m) != gbg_direct(e.core, m)) ++s.failures;
      }
    }
  }
  return s;
}

Sweep sweep_partitions(const std::string& name, int max_n, const std::function<bool(const Partition&)>& ok) {
  Sweep s{name};
  for (int n = 0; n <= max_n; ++n) {
    for (const auto& p : partitions_of(n)) {
      ++s.checked;
      if (!ok(p)) ++s.failures;
    }
  }
  return s;
}

Sweep sweep_littlewood(std::int64_t max_norm) {
  return sweep_partitions("littlewood_round_trip", static_cast<int>(std::min<std::int64_t>(max_norm, 12)),
                          [](const Partition& p) {
                            for (int t = 2; t <= 5; ++t) {
                              auto d = decompose(p, t);
                              std::int64_t q = 0;
                              for (const auto& part : d.quotient) q += part.norm();
                              if (recompose(d) != p || d.core.norm() + t * q != p.norm()) return false;
                            }
                            return true;
                          });
}

Sweep sweep_invariance(std::int64_t max_norm) {
  return sweep_partitions("s_core_gbg_invariance", static_cast<int>(std::min<std::int64_t>(max_norm, 15)),
                          [](const Partition& p) {
                            for (int s = 2; s <= 5; ++s) {
                              if (!s_core_gbg_invariance_check(p, s)) return false;
                            }
                            return true;
                          });
}

Sweep sweep_olsson(std::int64_t max_norm) {
  Sweep s{"olsson"};
  for (int a = 2; a <= 5; ++a) {
    for (int b = 2; b <= 5; ++b) {
      if (gcd(a, b) != 1) continue;
      auto r = olsson_check(a, b, max_norm);
      s.checked += r.checked;
      s.failures += static_cast<std::int64_t>(r.violations.size());
    }
  }
  return s;
}

Sweep sweep_anderson() {
  Sweep s{"st_core_count"};
  for (int a = 2; a <= 9; ++a) {
    for (int b = 2; a + b <= 11; ++b) {
      if (gcd(a, b) != 1) continue;
      ++s.checked;
      try {
        st_cores(a, b);
      } catch (const std::logic_error&) {
        ++s.failures;
      }
    }
  }
  return s;
}

Sweep sweep_census(const RunConfig& cfg) {
  Sweep s{"nu_census"};
  for (int a = 2; a <= 6; ++a) {
    for (int b = 2; b <= 6; ++b) {
      if (gcd(a, b) != 1) continue;
      ++s.checked;
      auto c = nu(a, b, {cfg.budget, cfg.jobs});
      if (c.count > c.bound || (c.count == c.bound) != census_meets_bound(a, b)) ++s.failures;
    }
  }
  return s;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"t-cores, GBG-ranks and their generating functions", "tcore"};
  app.fallthrough();
  app.require_subcommand(1);
  app.add_option("--order", cfg.order, "q-series truncation order")
      ->envname("TCORE_ORDER")
      ->check(CLI::Range(std::int64_t{2}, std::int64_t{100000}))
      ->capture_default_str();
  app.add_option("--budget", cfg.budget, "maximum residue vectors examined by nu")
      ->envname("TCORE_BUDGET")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  app.add_option("--max-norm", cfg.max_norm, "norm bound for exhaustive sweeps")
      ->envname("TCORE_MAX_NORM")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  app.add_option("--format", cfg.format, "output format")
      ->envname("TCORE_FORMAT")
      ->check(CLI::IsMember({"json", "table"}))
      ->capture_default_str();
  app.add_flag("--json", cfg.json_flag, "shorthand for --format json");
  app.add_option("--jobs", cfg.jobs, "worker threads")
      ->envname("TCORE_JOBS")
      ->check(CLI::Range(1, 256))
      ->capture_default_str();

  int code = kExitOk;
  std::function<void()> action;

  // gbg
  std::string partition_text, nvec_text;
  int mod = 0;
  auto* gbg_cmd = app.add_subcommand("gbg", "GBG-rank of a partition or of a t-core given by its n-vector");
  auto* part_opt = gbg_cmd->add_option("--partition", partition_text, "parts, e.g. \"4,2\"");
  auto* nvec_opt = gbg_cmd->add_option("--nvec", nvec_text, "zero-sum n-vector of a t-core");
  part_opt->excludes(nvec_opt);
  gbg_cmd->add_option("--mod,--s", mod, "modulus s")->check(CLI::Range(1, 1000));
  gbg_cmd->require_subcommand(0, 1);

  // nu
  int s = 0, t = 0;
  auto add_st = [&](CLI::App* cmd) {
    cmd->add_option("--s", s, "modulus s")->required()->check(CLI::Range(1, 1000));
    cmd->add_option("--t", t, "modulus t")->required()->check(CLI::Range(1, 1000));
  };
  auto nu_action = [&] {
    auto c = nu(s, t, {cfg.budget, cfg.jobs});
    json values = json::array();
    for (const auto& v : c.values) values.push_back(to_json(v));
    emit({{"s", s},
          {"t", t},
          {"count", c.count},
          {"bound", c.bound},
          {"equality", c.count == c.bound},
          {"predicted_equality", census_meets_bound(s, t)},
          {"candidates", c.candidates},
          {"values", values}},
         cfg, out);
    if (c.count > c.bound || (c.count == c.bound) != census_meets_bound(s, t)) code = kExitFailure;
  };
  auto table1_action = [&] {
    auto tab = table1();
    json rows = json::array();
    for (const auto& r : tab.rows) rows.push_back({{"index", r.index}, {"n", to_json(r.n)}, {"value", to_json(r.value)}});
    json groups = json::array();
    for (const auto& [v, idx] : tab.groups) groups.push_back({{"value", to_json(v)}, {"rows", idx}, {"size", idx.size()}});
    emit({{"rows", rows}, {"groups", groups}}, cfg, out);
  };
  auto* nu_cmd = app.add_subcommand("nu", "count distinct GBG-ranks mod s of t-cores");
  add_st(nu_cmd);
  nu_cmd->callback([&] { action = nu_action; });
  auto* gbg_nu = gbg_cmd->add_subcommand("nu", "same as the top-level nu");
  add_st(gbg_nu);
  gbg_nu->callback([&] { action = nu_action; });
  app.add_subcommand("table1", "GBG-ranks mod 3 of the 27 classes of 4-cores")->callback([&] { action = table1_action; });
  gbg_cmd->add_subcommand("table1", "same as the top-level table1")->callback([&] { action = table1_action; });

  gbg_cmd->callback([&] {
    if (action) return;
    if (mod < 1) throw CLI::RequiredError("--mod");
    if (part_opt->count() == 0 && nvec_opt->count() == 0) throw CLI::RequiredError("--partition or --nvec");
    action = [&] {
      json doc = {{"mod", mod}};
      if (part_opt->count() > 0) {
        Partition p = parse_partition(partition_text);
        doc["partition"] = to_json(p);
        doc["value"] = to_json(gbg_direct(p, mod));
      } else {
        NVector n = parse_nvec(nvec_text);
        doc["nvec"] = to_json(n);
        doc["core"] = to_json(nvec_to_core(n));
        doc["value"] = to_json(gbg_formula(n, mod));
      }
      emit(doc, cfg, out);
    };
  });

  // lemma14
  std::string j_text, jt_text;
  auto* lemma = app.add_subcommand("lemma14", "root sums/products of exponent vectors; counterexample families");
  lemma->add_option("--s", s, "modulus s")->required()->check(CLI::Range(2, 1000));
  lemma->add_option("--t", t, "vector length t (counterexample family)")->check(CLI::Range(1, 1000));
  auto* j_opt = lemma->add_option("--j", j_text, "exponent vector j");
  auto* jt_opt = lemma->add_option("--jt", jt_text, "exponent vector j~");
  j_opt->needs(jt_opt);
  jt_opt->needs(j_opt);
  lemma->callback([&] {
    if (j_opt->count() == 0 && t < 1) throw CLI::RequiredError("--t or --j/--jt");
    action = [&] {
      const bool explicit_vectors = j_opt->count() > 0;
      auto [j, jt] = explicit_vectors ? std::pair{ExponentVector(s, parse_ints(j_text)), ExponentVector(s, parse_ints(jt_text))}
                                      : counterexample_family(s, t);
      if (j.t() != jt.t()) throw DomainError("--j and --jt must have the same length");
      LemmaDecision d;
      if (gcd(s, j.t()) == 1) {
        d = lemma14_decide(j, jt);
      } else {
        d.conditions_hold = root_conditions_hold(j, jt);
        d.equal_forced = j == jt;
      }
      emit({{"s", s},
            {"t", j.t()},
            {"j", j.exps()},
            {"j_tilde", jt.exps()},
            {"conditions_hold", d.conditions_hold},
            {"equal_forced", d.equal_forced},
            {"coprime", gcd(s, j.t()) == 1},
            {"roots_determined", roots_determined(s, j.t())}},
           cfg, out);
      // A pair satisfying the conditions while distinct contradicts a determined case.
      if (d.conditions_hold && !d.equal_forced && roots_determined(s, j.t())) code = kExitFailure;
      if (!explicit_vectors && !(d.conditions_hold && !d.equal_forced)) code = kExitFailure;
    };
  });

  // qcheck
  std::vector<std::string> ids;
  bool all = false;
  auto* qcheck = app.add_subcommand("qcheck", "verify registered q-series identities");
  auto* id_opt = qcheck->add_option("--id", ids, "identity id, e.g. 4.13 (repeatable)");
  auto* all_opt = qcheck->add_flag("--all", all, "every registered identity");
  id_opt->excludes(all_opt);
  qcheck->callback([&] {
    if (ids.empty() && !all) throw CLI::RequiredError("--id or --all");
    action = [&] {
      if (all) ids = identity_ids();
      json reports = json::array();
      for (const auto& id : ids) {
        auto r = check_identity(id, cfg.order);
        if (!r.holds) code = kExitFailure;
        reports.push_back(report_json(r));
      }
      emit(ids.size() == 1 && !all ? reports[0] : json{{"reports", reports}}, cfg, out);
    };
  });

  // series
  std::string eta_text;
  std::int64_t lead = 0, display = 20;
  auto* series = app.add_subcommand("series", "expand an eta quotient q^lead prod E(q^m)^e");
  series->add_option("--eta", eta_text, "factors m:e separated by commas, e.g. \"4:4,1:-1\"")->required();
  series->add_option("--lead", lead, "leading power of q")->capture_default_str();
  series->add_option("--display", display, "print terms below q^display")->capture_default_str();
  series->callback([&] {
    action = [&] {
      EtaQuotientSpec spec;
      spec.leading_power = lead;
      std::istringstream in(eta_text);
      std::string item;
      while (std::getline(in, item, ',')) {
        auto colon = item.find(':');
        if (colon == std::string::npos) throw ParseError("eta factor '" + item + "' is not of the form m:e");
        auto m = parse_ints(item.substr(0, colon)), e = parse_ints(item.substr(colon + 1));
        if (m.size() != 1 || e.size() != 1) throw ParseError("eta factor '" + item + "' is not of the form m:e");
        spec.factors.push_back({m[0], e[0]});
      }
      QSeries f = eta_quotient(spec, cfg.order);
      json coeffs = json::array();
      for (std::int64_t k = std::max<std::int64_t>(0, f.offset()); k < f.order(); ++k) coeffs.push_back(f.coeff(k).str());
      emit({{"order", cfg.order}, {"series", f.to_string(display)}, {"coeffs", coeffs}}, cfg, out);
    };
  });

  // cores
  auto* cores = app.add_subcommand("cores", "simultaneous cores, Olsson's theorem, Littlewood decomposition");
  cores->require_subcommand(1);
  auto* st = cores->add_subcommand("st", "list (s,t)-cores");
  add_st(st);
  st->callback([&] {
    action = [&] {
      auto set = st_cores(s, t);
      json list = json::array();
      for (const auto& c : set.cores) {
        list.push_back({{"partition", to_json(c)}, {"norm", c.norm()}, {"gbg_s", to_json(gbg_direct(c, s))}});
      }
      auto inj = gbg_injectivity_check(s, t);
      json collisions = json::array();
      for (const auto& [v, group] : inj.collisions) {
        json members = json::array();
        for (const auto& p : group) members.push_back(to_json(p));
        collisions.push_back({{"value", to_json(v)}, {"cores", members}});
      }
      emit({{"s", s},
            {"t", t},
            {"count", set.cores.size()},
            {"cores", list},
            {"injective", inj.injective},
            {"collisions", collisions}},
           cfg, out);
    };
  });
  auto* olsson = cores->add_subcommand("olsson", "check that s-cores of t-cores are t-cores");
  add_st(olsson);
  olsson->callback([&] {
    action = [&] {
      auto r = olsson_check(s, t, cfg.max_norm);
      json violations = json::array();
      for (const auto& p : r.violations) violations.push_back(to_json(p));
      emit({{"s", s}, {"t", t}, {"max_norm", cfg.max_norm}, {"checked", r.checked}, {"holds", r.holds},
            {"violations", violations}},
           cfg, out);
      if (!r.holds) code = kExitFailure;
    };
  });
  int dt = 0;
  auto decompose_action = [&] {
    Partition p = parse_partition(partition_text);
    auto d = decompose(p, dt);
    json quotient = json::array();
    for (const auto& q : d.quotient) quotient.push_back(to_json(q));
    auto split = diagonal_split(p);
    emit({{"partition", to_json(p)},
          {"norm", p.norm()},
          {"t", dt},
          {"core", to_json(d.core)},
          {"quotient", quotient},
          {"n_vector", to_json(n_vector(p, dt))},
          {"durfee", split.d},
          {"diagonal_split", {{"pi1", split.pi1}, {"pi2", split.pi2}}}},
         cfg, out);
  };
  auto add_decompose = [&](CLI::App* cmd) {
    cmd->add_option("--partition", partition_text, "parts, e.g. \"6,4,1\"")->required();
    cmd->add_option("--t", dt, "modulus t")->required()->check(CLI::Range(2, 1000));
    cmd->callback([&] { action = decompose_action; });
  };
  add_decompose(cores->add_subcommand("decompose", "t-core and t-quotient of a partition"));
  add_decompose(app.add_subcommand("decompose", "t-core, t-quotient, n-vector and diagonal split"));

  // verify-all
  app.add_subcommand("verify-all", "every registered identity plus the property sweeps")->callback([&] {
    action = [&] {
      json reports = json::array();
      for (const auto& id : identity_ids()) {
        auto r = check_identity(id, cfg.order);
        if (!r.holds) code = kExitFailure;
        reports.push_back(report_json(r));
      }
      auto tab = table1();
      Sweep t1{"table1_groups", 1, 0};
      std::map<GbgValue, std::size_t> sizes;
      for (const auto& [v, idx] : tab.groups) sizes[v] = idx.size();
      const auto& c = four_core_gbg_values();
      const std::map<GbgValue, std::size_t> expected = {{c[0], 1}, {c[1], 12}, {c[2], 6}, {c[3], 4}, {c[4], 4}};
      if (sizes != expected) t1.failures = 1;
      std::vector<Sweep> sweeps = {t1,
                                   sweep_gks(cfg.max_norm),
                                   sweep_theorem_1_1(cfg.max_norm),
                                   sweep_littlewood(cfg.max_norm),
                                   sweep_invariance(cfg.max_norm),
                                   sweep_olsson(cfg.max_norm),
                                   sweep_anderson(),
                                   sweep_census(cfg)};
      json props = json::array();
      for (const auto& sw : sweeps) {
        if (sw.failures != 0) code = kExitFailure;
        props.push_back({{"name", sw.name}, {"checked", sw.checked}, {"failures", sw.failures}});
      }
      emit({{"order", cfg.order}, {"identities", reports}, {"properties", props}, {"ok", code == kExitOk}}, cfg, out);
    };
  });

  std::vector<std::string> argv(args.rbegin(), args.rend());
  try {
    app.parse(argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  }
  try {
    if (action) action();
  } catch (const ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const DomainError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitFailure;
  }
  return code;
}

}  // namespace tcore
