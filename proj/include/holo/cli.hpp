#pragma once

#include <CLI11.hpp>

#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "holo/holonomy.hpp"
#include "holo/initial_forms.hpp"
#include "holo/json_io.hpp"
#include "holo/seifert.hpp"

namespace holo::cli {

enum class Format { Text, Json };

struct CommandRequest {
  std::string subcommand;
  std::string file;             // input path; empty when inline_text is set
  std::string inline_text;      // inline presentation or JSON
  int cap = 6;
  bool force_cap = false;       // required for caps above 10
  Format format = Format::Text;
  int level = 2;                // derived level for `chen`
  std::vector<std::string> order;      // generator ordering for `mild`
  std::vector<std::string> positional;  // series mode and numbers
};

struct Result {
  int exit_code = 0;
  std::string output;
};

namespace detail {

inline std::string load_input(const CommandRequest& req) {
  if (!req.inline_text.empty() && !req.file.empty())
    throw std::invalid_argument("give either a file or --inline, not both");
  if (!req.inline_text.empty()) return req.inline_text;
  if (req.file.empty()) throw std::invalid_argument("no input given (file or --inline)");
  std::ifstream in(req.file);
  if (!in) throw std::invalid_argument("cannot open input file '" + req.file + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline json series_to_json(const RationalSeries& s) {
  json a = json::array();
  for (int k = 0; k <= s.cap; ++k) a.push_back(q_str(s[k]));
  return a;
}

inline json ints_to_json(const std::vector<int>& v) {
  json a = json::array();
  for (int x : v) a.push_back(x);
  return a;
}

inline json zs_to_json(const std::vector<Z>& v) {
  json a = json::array();
  for (const Z& x : v) a.push_back(x.str());
  return a;
}

inline std::string join_ints(const std::vector<int>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ", ";
    out += std::to_string(v[i]);
  }
  return out;
}

inline std::string join_zs(const std::vector<Z>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ", ";
    out += v[i].str();
  }
  return out;
}

inline std::string lie_relation_str(const LieElement& e,
                                    const std::string& letter = "y") {
  if (e.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : e.coeff) {
    if (!first) os << " + ";
    first = false;
    if (c != 1) os << q_str(c) << "*";
    os << "[";
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i) os << ",";
      os << letter << static_cast<int>(m[i]);
    }
    os << "]";
  }
  return os.str();
}

inline int generator_index(const GroupPresentation& p, const std::string& name) {
  for (int i = 0; i < p.generator_count(); ++i)
    if (p.generator_names[i] == name) return i + 1;
  throw std::invalid_argument("unknown generator '" + name + "' in ordering");
}

inline Result render(const CommandRequest& req, const json& j, const std::string& text) {
  if (req.format == Format::Json) return {0, j.dump(2) + "\n"};
  return {0, text};
}

// ---- subcommand handlers ----

inline Result run_cup(const CommandRequest& req) {
  GroupPresentation p = parse_presentation(load_input(req));
  EchelonPresentation e = echelonize(p);
  CupProductTable t = cup_table(e);
  json values = json::array();
  json table = json::array();
  std::ostringstream text;
  text << "cup products: b1 = " << t.b << ", h1 basis =";
  for (int i : e.h1_basis) text << " " << p.generator_names[i - 1];
  text << "\n";
  for (std::size_t c = 0; c < t.classes.size(); ++c)
    for (int i = 1; i <= t.b; ++i)
      for (int j = i + 1; j <= t.b; ++j) {
        const Q& v = t.matrices[c](i - 1, j - 1);
        values.push_back(q_str(v));
        table.push_back(json{{"class", t.classes[c]}, {"i", i}, {"j", j}, {"value", q_str(v)}});
        text << "  (u" << i << " cup u" << j << ", w" << t.classes[c] << ") = " << q_str(v)
             << "\n";
      }
  json out{{"command", "cup"},
           {"generators", p.generator_names},
           {"betti1", t.b},
           {"h1_basis", ints_to_json(e.h1_basis)},
           {"pivots", ints_to_json(e.pivots)},
           {"h2_classes", ints_to_json(e.h2_basis)},
           {"values", values},
           {"table", table}};
  return render(req, out, text.str());
}

inline Result run_holonomy(const CommandRequest& req) {
  GroupPresentation p = parse_presentation(load_input(req));
  EchelonPresentation e = echelonize(p);
  HolonomyPresentation hp = holonomy_presentation(e);
  RankReport r = graded_invariants(e, req.cap);
  json relations = json::array();
  for (const LieElement& rel : hp.lie_presentation.relations) {
    json terms = json::array();
    for (const auto& [m, c] : rel.coeff)
      terms.push_back(json{{"i", static_cast<int>(m[0])},
                           {"j", static_cast<int>(m[1])},
                           {"coeff", q_str(c)}});
    relations.push_back(terms);
  }
  json out{{"command", "holonomy"},
           {"cap", req.cap},
           {"betti1", e.betti1()},
           {"h1_basis", ints_to_json(e.h1_basis)},
           {"relations", relations},
           {"phibar", ints_to_json(r.phibar)},
           {"thetabar", ints_to_json(r.thetabar)},
           {"uh_series", series_to_json(r.uh_series)},
           {"dropped_relators", ints_to_json(r.dropped_relators)}};
  std::ostringstream text;
  text << "holonomy Lie algebra: lie(" << e.betti1() << ")";
  if (!hp.lie_presentation.relations.empty()) {
    text << " modulo:\n";
    for (const LieElement& rel : hp.lie_presentation.relations)
      text << "  " << lie_relation_str(rel) << "\n";
  } else {
    text << " (free)\n";
  }
  text << "phibar (dim h_k):   " << join_ints(r.phibar) << "\n";
  text << "thetabar (h/h''):   " << join_ints(r.thetabar) << "\n";
  text << "Hilb U(h):          ";
  for (int k = 0; k <= r.uh_series.cap; ++k)
    text << (k ? ", " : "") << q_str(r.uh_series[k]);
  text << "\n";
  if (!r.dropped_relators.empty())
    text << "dropped zero relations from relators: " << join_ints(r.dropped_relators) << "\n";
  return render(req, out, text.str());
}

inline Result run_chen(const CommandRequest& req) {
  if (req.level < 1) throw std::invalid_argument("derived level must be >= 1");
  GroupPresentation p = parse_presentation(load_input(req));
  EchelonPresentation e = echelonize(p);
  RankReport r = graded_invariants(e, req.cap, req.level);
  json out{{"command", "chen"},
           {"cap", req.cap},
           {"level", req.level},
           {"solvable_quotient_dims", ints_to_json(r.solvable_dims)},
           {"phibar", ints_to_json(r.phibar)}};
  std::ostringstream text;
  text << "dim (h/h^(" << req.level << "))_k for k = 1.." << req.cap << ": "
       << join_ints(r.solvable_dims) << "\n";
  return render(req, out, text.str());
}

inline Result run_mild(const CommandRequest& req) {
  GroupPresentation p = parse_presentation(load_input(req));
  std::vector<int> order;
  for (const std::string& name : req.order) order.push_back(generator_index(p, name));
  MildnessReport r = mildness_check(p, req.cap, order);
  json leading = json::array();
  for (const Mono& w : r.leading_words) {
    std::string s;
    for (unsigned char ch : w) s += (s.empty() ? "" : ".") + p.generator_names[ch - 1];
    leading.push_back(s);
  }
  json out{{"command", "mild"},
           {"cap", req.cap},
           {"weights", ints_to_json(r.weights)},
           {"leading_words", leading},
           {"combinatorial_pass", r.combinatorial_pass},
           {"combinatorial_failure", r.combinatorial_failure},
           {"hilbert_pass", r.hilbert_pass},
           {"tested_degree", r.tested_degree},
           {"quotient_dims", ints_to_json(r.quotient_dims)}};
  std::ostringstream text;
  text << "weights: " << join_ints(r.weights) << "\n";
  text << "leading words:";
  for (const json& s : leading) text << " " << s.get<std::string>();
  text << "\ncombinatorial (Anick) check: " << (r.combinatorial_pass ? "pass" : "FAIL")
       << (r.combinatorial_failure.empty() ? "" : " (" + r.combinatorial_failure + ")") << "\n";
  text << "Hilbert-series check: "
       << (r.hilbert_pass ? "consistent through degree " + std::to_string(r.tested_degree)
                          : "DISAGREES")
       << "\n";
  text << "dim L(G)_k: " << join_ints(r.quotient_dims) << "\n";
  return render(req, out, text.str());
}

inline Result run_onerelator(const CommandRequest& req) {
  GroupPresentation p = parse_presentation(load_input(req));
  OneRelatorReport r = onerelator_report(p, req.cap);
  json out{{"command", "onerelator"},
           {"cap", req.cap},
           {"weight", r.weight},
           {"graded_formal", r.graded_formal},
           {"holonomy_generators", r.holonomy.generators},
           {"holonomy_relations",
            r.holonomy.relations.empty()
                ? json::array()
                : json::array({lie_relation_str(r.holonomy.relations[0], "x")})},
           {"uh_series", series_to_json(r.uh_series)},
           {"lcs_dims", ints_to_json(r.lcs_dims)},
           {"labute_dims", zs_to_json(r.labute_dims)}};
  if (r.degree_weight_discrepancy)
    out["weight_degree_discrepancy"] =
        json{{"phibar", r.degree_weight_discrepancy->first.str()},
             {"phi", r.degree_weight_discrepancy->second.str()}};
  std::ostringstream text;
  text << "weight(r) = " << r.weight << "\n";
  text << "graded-formal: " << (r.graded_formal ? "true" : "false") << "\n";
  text << "holonomy: lie(" << r.holonomy.generators << ")";
  if (!r.holonomy.relations.empty())
    text << " modulo " << lie_relation_str(r.holonomy.relations[0], "x");
  text << "\nHilb U(h): ";
  for (int k = 0; k <= r.uh_series.cap; ++k)
    text << (k ? ", " : "") << q_str(r.uh_series[k]);
  text << "\nLCS ranks (L(G) dims): " << join_ints(r.lcs_dims) << "\n";
  text << "Labute closed form:    " << join_zs(r.labute_dims) << "\n";
  if (r.degree_weight_discrepancy)
    text << "discrepancy at degree " << r.weight
         << ": phibar = " << r.degree_weight_discrepancy->first.str()
         << ", phi = " << r.degree_weight_discrepancy->second.str() << "\n";
  return render(req, out, text.str());
}

inline Result run_series(const CommandRequest& req) {
  if (req.positional.empty())
    throw std::invalid_argument("series: need a mode (koszul | pbw | pbwinv | chen)");
  const std::string& mode = req.positional[0];
  auto numbers = [&](std::size_t from) {
    std::vector<long> out;
    for (std::size_t i = from; i < req.positional.size(); ++i)
      out.push_back(std::stol(req.positional[i]));
    return out;
  };
  std::ostringstream text;
  if (mode == "koszul") {
    std::vector<long> c = numbers(1);
    if (c.empty() || c[0] != 1)
      throw std::invalid_argument("series koszul: coefficients must start with 1");
    KoszulReciprocal r = koszul_reciprocal(series_from_ints(c, req.cap));
    json out{{"command", "series"},
             {"mode", "koszul"},
             {"cap", req.cap},
             {"coefficients", series_to_json(r.series)}};
    out["first_negative_degree"] =
        r.first_negative_degree ? json(*r.first_negative_degree) : json(nullptr);
    text << "reciprocal coefficients: ";
    for (int k = 0; k <= r.series.cap; ++k) text << (k ? ", " : "") << q_str(r.series[k]);
    text << "\n";
    if (r.first_negative_degree)
      text << "negative coefficient at degree " << *r.first_negative_degree
           << ": not Koszul\n";
    else
      text << "no negative coefficient through degree " << req.cap << "\n";
    return render(req, out, text.str());
  }
  if (mode == "pbw") {
    std::vector<long> d = numbers(1);
    std::vector<Z> dims(d.begin(), d.end());
    RationalSeries s = pbw_series(dims, req.cap);
    json out{{"command", "series"},
             {"mode", "pbw"},
             {"cap", req.cap},
             {"coefficients", series_to_json(s)}};
    text << "Hilb: ";
    for (int k = 0; k <= s.cap; ++k) text << (k ? ", " : "") << q_str(s[k]);
    text << "\n";
    return render(req, out, text.str());
  }
  if (mode == "pbwinv") {
    std::vector<long> c = numbers(1);
    if (c.empty() || c[0] != 1)
      throw std::invalid_argument("series pbwinv: coefficients must start with 1");
    PbwInversion inv = pbw_invert(series_from_ints(c, req.cap));
    json out{{"command", "series"}, {"mode", "pbwinv"}, {"cap", req.cap}, {"ok", inv.ok}};
    if (inv.ok) {
      out["dims"] = zs_to_json(inv.dims);
      text << "dims: " << join_zs(inv.dims) << "\n";
    } else {
      out["failed_degree"] = inv.failed_degree;
      out["offending_value"] = q_str(inv.offending_value);
      text << "not a PBW series: degree " << inv.failed_degree << " gives "
           << q_str(inv.offending_value) << "\n";
    }
    return render(req, out, text.str());
  }
  if (mode == "chen") {
    if (req.positional.size() != 3)
      throw std::invalid_argument("series chen: need <free|surface|onerelator-comm|onerelator-noncomm> <param>");
    const std::string& kind = req.positional[1];
    long param = std::stol(req.positional[2]);
    ChenMode cm;
    if (kind == "free")
      cm = ChenMode::Free;
    else if (kind == "surface")
      cm = ChenMode::Surface;
    else if (kind == "onerelator-comm")
      cm = ChenMode::OneRelatorComm;
    else if (kind == "onerelator-noncomm")
      cm = ChenMode::OneRelatorNonComm;
    else
      throw std::invalid_argument("series chen: unknown mode '" + kind + "'");
    std::vector<Z> t = chen_rank_formulas(cm, param, req.cap);
    json out{{"command", "series"},
             {"mode", "chen"},
             {"kind", kind},
             {"param", param},
             {"cap", req.cap},
             {"ranks", zs_to_json(t)}};
    text << "theta_k for k = 1.." << req.cap << ": " << join_zs(t) << "\n";
    return render(req, out, text.str());
  }
  throw std::invalid_argument("series: unknown mode '" + mode + "'");
}

inline Result run_fdlie(const CommandRequest& req) {
  json in = json::parse(load_input(req));
  StructureConstants sc = structure_constants_from_json(in);
  LieVerdict v = validate(sc);
  if (!v.ok) {
    json out{{"command", "fdlie"}, {"valid", false}, {"violation", v.violation}};
    return render(req, out, "not a Lie algebra: " + v.violation + "\n");
  }
  ObstructionProfile prof = obstruction_profile(sc);
  LcsResult lcs = lcs_and_gr(sc);
  json out{{"command", "fdlie"},
           {"valid", true},
           {"lcs_dims", ints_to_json(lcs.lcs_dims)},
           {"center_dim", prof.center_dim},
           {"gr_center_dim", prof.gr_center_dim},
           {"derived_dims", ints_to_json(prof.derived_dims)},
           {"gr_derived_dims", ints_to_json(prof.gr_derived_dims)},
           {"metabelian", prof.metabelian},
           {"gr_metabelian", prof.gr_metabelian},
           {"obstruction_found", prof.obstruction_found},
           {"gr", structure_constants_to_json(lcs.gr)}};
  std::ostringstream text;
  text << "LCS dims: " << join_ints(lcs.lcs_dims) << "\n";
  text << "center dim (g, gr g): " << prof.center_dim << ", " << prof.gr_center_dim << "\n";
  text << "derived dims g:    " << join_ints(prof.derived_dims) << "\n";
  text << "derived dims gr g: " << join_ints(prof.gr_derived_dims) << "\n";
  text << "metabelian (g, gr g): " << (prof.metabelian ? "true" : "false") << ", "
       << (prof.gr_metabelian ? "true" : "false") << "\n";
  text << (prof.obstruction_found
               ? "obstruction found: g is not isomorphic to gr(g) "
                 "(not filtered-formal)\n"
               : "no obstruction found (necessary conditions only; this does "
                 "not certify an isomorphism)\n");
  return render(req, out, text.str());
}

inline Result run_seifert(const CommandRequest& req) {
  SeifertInvariants s = seifert_from_json(json::parse(load_input(req)));
  SeifertData data = seifert_data(s);
  SeifertRanks ranks = closed_form_ranks(s, req.cap);
  GradedLiePresentation holo = holonomy_closed_form(s);
  json fibers = json::array();
  for (auto [a, b] : s.fibers) fibers.push_back({a, b});
  json relations = json::array();
  for (const LieElement& rel : holo.relations) relations.push_back(lie_relation_str(rel, "g"));
  json out{{"command", "seifert"},
           {"cap", req.cap},
           {"genus", s.genus},
           {"b", s.b},
           {"fibers", fibers},
           {"euler", q_str(data.euler)},
           {"presentation", presentation_str(data.presentation)},
           {"phi", zs_to_json(ranks.phi)},
           {"phibar", zs_to_json(ranks.phibar)},
           {"theta", zs_to_json(ranks.theta)},
           {"thetabar", zs_to_json(ranks.thetabar)},
           {"holonomy_generators", holo.generators},
           {"holonomy_relations", relations}};
  std::ostringstream text;
  text << "e = " << q_str(data.euler) << "\n";
  text << "presentation: " << presentation_str(data.presentation) << "\n";
  text << "phi:      " << join_zs(ranks.phi) << "\n";
  text << "phibar:   " << join_zs(ranks.phibar) << "\n";
  text << "theta:    " << join_zs(ranks.theta) << "\n";
  text << "thetabar: " << join_zs(ranks.thetabar) << "\n";
  text << "holonomy: lie(" << holo.generators << ")"
       << (holo.relations.empty() ? " (free)" : " with relations:") << "\n";
  for (const json& r : relations) text << "  " << r.get<std::string>() << "\n";
  return render(req, out, text.str());
}

}  // namespace detail

inline Result dispatch(const CommandRequest& req) {
  try {
    if (req.cap < 1) throw std::invalid_argument("cap must be >= 1");
    if (req.cap > 10 && !req.force_cap)
      throw std::invalid_argument("caps above 10 need --force");
    if (req.subcommand == "cup") return detail::run_cup(req);
    if (req.subcommand == "holonomy") return detail::run_holonomy(req);
    if (req.subcommand == "chen") return detail::run_chen(req);
    if (req.subcommand == "mild") return detail::run_mild(req);
    if (req.subcommand == "onerelator") return detail::run_onerelator(req);
    if (req.subcommand == "series") return detail::run_series(req);
    if (req.subcommand == "fdlie") return detail::run_fdlie(req);
    if (req.subcommand == "seifert") return detail::run_seifert(req);
    throw std::invalid_argument("unknown subcommand '" + req.subcommand + "'");
  } catch (const CapExceeded& e) {
    json err{{"error", {{"type", "cap_exceeded"}, {"relator", e.relator}, {"message", e.what()}}}};
    std::string text = req.format == Format::Json ? err.dump(2) + "\n"
                                                  : std::string(e.what()) + "\n";
    return {2, text};
  } catch (const ParseError& e) {
    json err{{"error",
              {{"type", "parse_error"}, {"line", e.line}, {"column", e.column}, {"message", e.what()}}}};
    std::string text = req.format == Format::Json ? err.dump(2) + "\n"
                                                  : std::string(e.what()) + "\n";
    return {1, text};
  } catch (const std::exception& e) {
    json err{{"error", {{"type", "input_error"}, {"message", e.what()}}}};
    std::string text = req.format == Format::Json ? err.dump(2) + "\n"
                                                  : std::string(e.what()) + "\n";
    return {1, text};
  }
}

/// argv-style entry point (without the program name).
inline Result run(const std::vector<std::string>& args) {
  CLI::App app{"exact holonomy Lie algebra and lower central series calculator"};
  app.require_subcommand(0, 1);

  CommandRequest req;
  std::string format = "text";
  std::string order_csv;

  auto add_common = [&](CLI::App* sub, bool takes_presentation) {
    sub->add_option("--cap", req.cap, "degree cap")->capture_default_str();
    sub->add_flag("--force", req.force_cap, "allow caps above 10");
    sub->add_option("--format", format, "text or json")
        ->check(CLI::IsMember({"text", "json"}));
    if (takes_presentation) {
      sub->add_option("file", req.file, "input file");
      sub->add_option("--inline", req.inline_text, "inline input text");
    }
  };

  CLI::App* cup = app.add_subcommand("cup", "cup-product table");
  add_common(cup, true);
  CLI::App* holonomy = app.add_subcommand("holonomy", "holonomy Lie algebra and ranks");
  add_common(holonomy, true);
  CLI::App* chen = app.add_subcommand("chen", "solvable-quotient dimensions");
  add_common(chen, true);
  chen->add_option("--level", req.level, "derived level i")->capture_default_str();
  CLI::App* mild = app.add_subcommand("mild", "mildness report");
  add_common(mild, true);
  mild->add_option("--order", order_csv, "generator ordering, highest first (comma separated)");
  CLI::App* onerel = app.add_subcommand("onerelator", "one-relator weight and formality report");
  add_common(onerel, true);
  CLI::App* series = app.add_subcommand("series", "power series utilities");
  add_common(series, false);
  series->add_option("args", req.positional, "mode and numbers");
  CLI::App* fdlie = app.add_subcommand("fdlie", "nilpotent obstruction profile");
  add_common(fdlie, true);
  CLI::App* seifert = app.add_subcommand("seifert", "Seifert manifold group invariants");
  add_common(seifert, true);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    std::ostringstream os;
    if (e.get_exit_code() == 0) {
      // --help goes to stdout with success
      os << app.help();
      return {0, os.str()};
    }
    os << "error: " << e.what() << "\n";
    return {1, os.str()};
  }

  CLI::App* chosen = nullptr;
  for (CLI::App* sub : {cup, holonomy, chen, mild, onerel, series, fdlie, seifert})
    if (sub->parsed()) chosen = sub;
  if (!chosen) return {1, "error: expected a subcommand; try --help\n" + app.help()};
  req.subcommand = chosen->get_name();
  req.format = format == "json" ? Format::Json : Format::Text;
  if (!order_csv.empty()) {
    std::stringstream ss(order_csv);
    std::string item;
    while (std::getline(ss, item, ',')) req.order.push_back(item);
  }
  return dispatch(req);
}

}  // namespace holo::cli
