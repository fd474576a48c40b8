#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "matschur/report.hpp"
#include "matschur/selftest.hpp"

using namespace matschur;
using nlohmann::json;

namespace {

struct NamedMatroid {
  std::string name;
  Matroid matroid;
};

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Subset subset_from_int_list(const std::vector<int>& xs) {
  Subset s = 0;
  for (int x : xs) {
    if (x < 0 || x >= kMaxGroundSize) throw InputError("element out of range: " + std::to_string(x));
    s |= (1u << x);
  }
  return s;
}

NamedMatroid matroid_from_json(const json& j) {
  if (!j.is_object() || !j.contains("kind")) throw InputError("matroid JSON needs a \"kind\"");
  std::string kind = j.at("kind").get<std::string>();
  std::string name = j.value("name", "");
  if (kind == "bases") {
    int n = j.at("n").get<int>();
    std::vector<Subset> bases;
    for (const auto& b : j.at("bases")) bases.push_back(subset_from_int_list(b.get<std::vector<int>>()));
    if (name.empty()) name = "bases(" + std::to_string(n) + ")";
    return {name, Matroid::from_bases(n, bases)};
  }
  if (kind == "graphic") {
    int vertices = j.at("vertices").get<int>();
    std::vector<std::pair<int, int>> edges;
    for (const auto& e : j.at("edges")) {
      auto v = e.get<std::vector<int>>();
      if (v.size() != 2) throw InputError("edge must be a pair");
      edges.emplace_back(v[0], v[1]);
    }
    if (name.empty()) name = "graphic(" + std::to_string(vertices) + ")";
    return {name, Matroid::from_graph(vertices, edges)};
  }
  if (kind == "uniform") {
    int r = j.at("r").get<int>(), n = j.at("n").get<int>();
    if (name.empty()) name = "U(" + std::to_string(r) + "," + std::to_string(n) + ")";
    return {name, Matroid::uniform(r, n)};
  }
  if (kind == "dual") {
    NamedMatroid inner = matroid_from_json(j.at("of"));
    if (name.empty()) name = inner.name + "*";
    return {name, inner.matroid.dual()};
  }
  throw InputError("unknown matroid kind \"" + kind + "\"");
}

NamedMatroid parse_matroid(const std::string& spec) {
  if (spec == "K4") return {"K4", k4()};
  if (spec.rfind("U:", 0) == 0) {
    auto comma = spec.find(',');
    if (comma == std::string::npos) throw InputError("expected U:r,n");
    int r = std::stoi(spec.substr(2, comma - 2));
    int n = std::stoi(spec.substr(comma + 1));
    return {"U(" + std::to_string(r) + "," + std::to_string(n) + ")", Matroid::uniform(r, n)};
  }
  if (spec.rfind("Mn*:", 0) == 0) {
    int n = std::stoi(spec.substr(4));
    return {"M" + std::to_string(n) + "*", Matroid::uniform(1, n).dual()};
  }
  if (spec.rfind("Mn:", 0) == 0) {
    int n = std::stoi(spec.substr(3));
    return {"M" + std::to_string(n), Matroid::uniform(1, n)};
  }
  std::ifstream in(spec);
  if (!in) throw InputError("cannot open matroid file or unknown builtin: " + spec);
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw InputError("malformed JSON in " + spec + ": " + e.what());
  }
  return matroid_from_json(j);
}

Weights parse_weights(const std::string& csv, int n) {
  if (csv.empty()) return Weights::ones(n);
  std::vector<std::int64_t> w;
  std::stringstream ss(csv);
  std::string tok;
  while (std::getline(ss, tok, ',')) w.push_back(std::stoll(tok));
  if (static_cast<int>(w.size()) != n)
    throw InputError("expected " + std::to_string(n) + " weights, got " +
                     std::to_string(w.size()));
  return Weights{w};
}

Report base_report(const NamedMatroid& nm, const Weights& a) {
  Report r;
  r.matroid_name = nm.name;
  r.n = nm.matroid.size();
  r.weights = a.values();
  r.flats = nm.matroid.cyclic_flats().flats;
  return r;
}

void write_json(const Report& r, const std::string& path) {
  if (path.empty()) return;
  json j = report_to_json(r);
  if (path == "-") {
    std::cout << j.dump(2) << "\n";
    return;
  }
  std::ofstream out(path);
  if (!out) throw InputError("cannot write " + path);
  out << j.dump(2) << "\n";
}

void fill_characters(Report& r, const NamedMatroid& nm, const Weights& a, std::int64_t p) {
  RingelDatum dq = build_datum(nm.matroid, a, FieldSpec::rationals());
  for (Subset e : dq.poset().flats) r.standard_characters[e] = standard_character(dq, e);
  if (p > 0) {
    r.field = "Fp";
    r.p = p;
    RingelDatum dp = build_datum(nm.matroid, a, FieldSpec::mod(p));
    for (Subset e : dp.poset().flats) r.simple_characters[e] = simple_character(dp, e);
  } else {
    for (Subset e : dq.poset().flats) r.simple_characters[e] = simple_character(dq, e);
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"matroidal Schur algebra calculator"};
  app.require_subcommand(1);

  std::string matroid_spec, weights_csv, json_path, flat_csv;
  std::vector<std::int64_t> primes;
  long long cap = 40;
  app.add_option("--matroid", matroid_spec, "builtin name (K4, U:r,n, Mn:k, Mn*:k) or JSON file");
  app.add_option("--weights", weights_csv, "comma-separated integer weights, default all 1");
  app.add_option("--prime", primes, "prime characteristic (repeatable)");
  app.add_option("--flat", flat_csv, "flat as comma-separated elements");
  app.add_option("--json", json_path, "write the JSON report to this path ('-' for stdout)");
  app.add_option("--cap", cap, "dimension cap for the operator model");

  auto* cmd_describe = app.add_subcommand("describe", "flats, invariants, Tutte polynomial")->fallthrough();
  auto* cmd_characters = app.add_subcommand("characters", "standard and simple characters")->fallthrough();
  auto* cmd_decomp = app.add_subcommand("decomp", "decomposition multiplicities")->fallthrough();
  auto* cmd_semisimple = app.add_subcommand("semisimple", "bad primes and verdicts")->fallthrough();
  auto* cmd_det = app.add_subcommand("det", "Gram determinants against the predicted factorization")->fallthrough();
  auto* cmd_jantzen = app.add_subcommand("jantzen", "Jantzen-type sum for one flat")->fallthrough();
  auto* cmd_identities = app.add_subcommand("identities", "dimension and convolution identities")->fallthrough();
  auto* cmd_axioms = app.add_subcommand("axioms", "A1-A3 and subspace lemmas over Q")->fallthrough();
  auto* cmd_dims = app.add_subcommand("dims", "dimensions of R and Rcheck")->fallthrough();
  auto* cmd_selftest = app.add_subcommand("selftest", "run the acceptance fixture suite")->fallthrough();

  CLI11_PARSE(app, argc, argv);

  try {
    if (cmd_selftest->parsed()) return selftest::print_acceptance(std::cout) ? 0 : 1;

    if (matroid_spec.empty()) throw InputError("--matroid is required");
    NamedMatroid nm = parse_matroid(matroid_spec);
    Weights a = parse_weights(weights_csv, nm.matroid.size());
    for (auto p : primes)
      if (!is_prime(p)) throw InputError(std::to_string(p) + " is not prime");

    Report rep = base_report(nm, a);
    int exit_code = 0;
    std::ostringstream extra;

    if (cmd_describe->parsed()) {
      const Matroid& m = nm.matroid;
      TuttePoly t = m.tutte();
      extra << "rank " << m.rank() << ", " << m.bases().size() << " bases, "
            << (m.size() > 0 && m.connected() ? "connected" : "not connected") << "\n";
      extra << "Tutte polynomial: " << t.to_string() << "\n";
      extra << "beta = " << m.beta() << ", mu+ = " << m.mu_plus()
            << ", mu+(dual) = " << m.mu_plus_dual() << "\n";
      extra << "flats: " << m.flats().size() << ", cyclic flats: " << rep.flats.size() << "\n";
    } else if (cmd_characters->parsed()) {
      if (primes.empty()) {
        fill_characters(rep, nm, a, 0);
      } else {
        fill_characters(rep, nm, a, primes.front());
        for (std::size_t i = 1; i < primes.size(); ++i) {
          Report side = base_report(nm, a);
          fill_characters(side, nm, a, primes[i]);
          extra << "--- p = " << primes[i] << " ---\n" << render_text(side);
        }
        if (primes.size() > 1 && !json_path.empty())
          throw InputError("--json supports a single --prime");
      }
    } else if (cmd_decomp->parsed()) {
      if (primes.size() != 1) throw InputError("decomp needs exactly one --prime");
      fill_characters(rep, nm, a, primes.front());
      RingelDatum dp = build_datum(nm.matroid, a, FieldSpec::mod(primes.front()));
      DecompMatrix dm = decomposition_matrix(dp);
      for (const auto& [key, v] : dm.entries)
        rep.decomposition.push_back({key.first, key.second, v});
    } else if (cmd_semisimple->parsed()) {
      BadPrimes bp = bad_primes(nm.matroid, a);
      rep.bad_primes.assign(bp.primes.begin(), bp.primes.end());
      rep.zero_sum_pairs = bp.zero_sums;
      std::vector<std::int64_t> ask = primes;
      if (ask.empty()) ask = {2, 3, 5, 7, 11, 13};
      for (auto p : ask)
        extra << "p = " << p << ": "
              << (semisimple_test(nm.matroid, a, p) ? "semisimple" : "NOT semisimple") << "\n";
    } else if (cmd_det->parsed()) {
      bool unit_weights = true;
      for (auto w : a.values()) unit_weights = unit_weights && (w == 1 || w == -1);
      auto add_record = [&](Subset e, Subset f) {
        Report::DetRecord rec;
        rec.lower = e;
        rec.upper = f;
        DetFactorization fact = bv_predicted_pair(nm.matroid, a, e, f);
        rec.factors = fact.factors;
        rec.predicted = fact.product;
        rec.gram = gram_det_u_pair(nm.matroid, a, e, f);
        rec.match = abs(rec.gram) == abs(rec.predicted);
        rep.determinants.push_back(rec);
        return rec.match;
      };
      bool top_match = true;
      bool headline = nm.matroid.coloops() == 0;
      if (headline) top_match = add_record(0, nm.matroid.ground());
      CyclicFlats cf = nm.matroid.cyclic_flats();
      for (Subset e : cf.flats)
        for (Subset f : cf.flats)
          if (e != f && subset_of(e, f) &&
              !(headline && e == 0 && f == nm.matroid.ground()))
            add_record(e, f);
      if (!headline)
        extra << "note: the matroid has coloops, so the full-ground-set comparison is skipped\n";
      if (unit_weights && !top_match) exit_code = 1;
      if (!unit_weights)
        extra << "note: with non-unit weights the determinant matches the prediction only up to"
                 " a signed monomial in the weights\n";
    } else if (cmd_jantzen->parsed()) {
      if (primes.size() != 1) throw InputError("jantzen needs exactly one --prime");
      Subset e = 0;
      if (!flat_csv.empty()) {
        std::vector<int> xs;
        std::stringstream ss(flat_csv);
        std::string tok;
        while (std::getline(ss, tok, ',')) xs.push_back(std::stoi(tok));
        e = subset_from_int_list(xs);
      }
      RingelDatum dq = build_datum(nm.matroid, a);
      JantzenSum js = jantzen_rhs(dq, primes.front(), e);
      extra << "Jantzen sum for Delta" << subset_to_string(e) << " at p = " << primes.front()
            << ":\n";
      if (js.coefficients.empty()) extra << "  0 (Delta = L at this flat)\n";
      for (const auto& [k, c] : js.coefficients)
        extra << "  " << c << " * ch Delta" << subset_to_string(k) << "\n";
      extra << "  resolved: " << js.resolved.to_string() << "\n";
      RingelDatum dp = build_datum(nm.matroid, a, FieldSpec::mod(primes.front()));
      Character diff = standard_character(dq, e);
      diff -= simple_character(dp, e);
      extra << "  ch Delta - ch L = " << diff.to_string() << "\n";
      if (!js.resolved.dominates(diff)) {
        extra << "  VIOLATION: RHS does not dominate ch Delta - ch L\n";
        exit_code = 1;
      }
    } else if (cmd_identities->parsed()) {
      IdentityReport ir = krs_checks(nm.matroid);
      rep.identities = Report::IdentitySummary{ir.dimension_identity, ir.springer_refinement,
                                               ir.tutte_convolution,  ir.bases_count,
                                               ir.flat_sum,           ir.springer_sum};
      if (!ir.all_pass()) exit_code = 1;
    } else if (cmd_axioms->parsed()) {
      AxiomReport ar = check_axioms(build_datum(nm.matroid, a));
      rep.axioms = Report::AxiomSummary{ar.a1,
                                        ar.a2,
                                        ar.a3,
                                        ar.subrings,
                                        ar.u_perp_ucheck,
                                        ar.uperp_is_im_delta_h,
                                        ar.contraction_stability,
                                        ar.violations};
      if (!ar.all_pass()) exit_code = 1;
    } else if (cmd_dims->parsed()) {
      RingelDatum d = build_datum(nm.matroid, a);
      AlgebraDims dims = algebra_dims(d);
      extra << "dim R = " << dims.dim_r << ", dim Rcheck = " << dims.dim_rcheck << "\n";
      extra << "blocks of R (x,y -> dim):\n";
      for (const auto& [key, v] : dims.r_blocks)
        extra << "  " << subset_to_string(key.first) << "," << subset_to_string(key.second)
              << " -> " << v << "\n";
      extra << "blocks of Rcheck:\n";
      for (const auto& [key, v] : dims.rcheck_blocks)
        extra << "  " << subset_to_string(key.first) << "," << subset_to_string(key.second)
              << " -> " << v << "\n";
      try {
        OperatorModel om = operator_model(d, cap);
        Index span_r = span_dimension(om.r_generators, true);
        Index cent = centralizer_dimension(om.rcheck_generators, om.dim_b);
        extra << "operator model on dim B = " << om.dim_b << ": span(R) = " << span_r
              << ", centralizer of Rcheck = " << cent << "\n";
        if (span_r != dims.dim_r || cent != dims.dim_r) {
          extra << "  MISMATCH against the block formula\n";
          exit_code = 1;
        }
      } catch (const DimensionTooLarge& e) {
        extra << "operator model skipped: " << e.what() << "\n";
      }
    }

    std::cout << render_text(rep);
    std::string extra_text = extra.str();
    if (!extra_text.empty()) std::cout << extra_text;
    write_json(rep, json_path);
    return exit_code;
  } catch (const InputError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const MatroidError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const WeightError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
