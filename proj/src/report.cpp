#include "matschur/report.hpp"

#include <sstream>

namespace matschur {

using nlohmann::json;

std::string subset_to_key(Subset s) {
  std::string out = "[";
  bool first = true;
  for (int x : elements(s)) {
    if (!first) out += ",";
    out += std::to_string(x);
    first = false;
  }
  return out + "]";
}

Subset subset_from_key(const std::string& key) {
  json j = json::parse(key);
  Subset s = 0;
  for (int x : j.get<std::vector<int>>()) s |= (1u << x);
  return s;
}

bool Report::DetRecord::factors_equal(const DetRecord& o) const {
  if (factors.size() != o.factors.size()) return false;
  for (std::size_t i = 0; i < factors.size(); ++i)
    if (factors[i].flat != o.factors[i].flat || factors[i].base != o.factors[i].base ||
        factors[i].exponent != o.factors[i].exponent)
      return false;
  return true;
}

bool Report::operator==(const Report& o) const {
  return matroid_name == o.matroid_name && n == o.n && weights == o.weights &&
         field == o.field && p == o.p && flats == o.flats &&
         standard_characters == o.standard_characters &&
         simple_characters == o.simple_characters && decomposition == o.decomposition &&
         bad_primes == o.bad_primes && zero_sum_pairs == o.zero_sum_pairs &&
         determinants == o.determinants && identities == o.identities && axioms == o.axioms;
}

namespace {

json subset_to_array(Subset s) { return json(elements(s)); }

Subset subset_from_array(const json& j) {
  Subset s = 0;
  for (int x : j.get<std::vector<int>>()) s |= (1u << x);
  return s;
}

json character_to_json(const Character& ch) {
  json out = json::object();
  for (const auto& [f, v] : ch.coeff) out[subset_to_key(f)] = v;
  return out;
}

Character character_from_json(const json& j) {
  Character ch;
  for (auto it = j.begin(); it != j.end(); ++it)
    ch.add(subset_from_key(it.key()), it.value().get<long long>());
  return ch;
}

}  // namespace

json report_to_json(const Report& r) {
  json j;
  j["matroid"] = r.matroid_name;
  j["n"] = r.n;
  j["weights"] = r.weights;
  j["field"] = r.field;
  if (r.field == "Fp") j["p"] = r.p;
  json flats = json::array();
  for (Subset f : r.flats) flats.push_back(subset_to_array(f));
  j["flats"] = flats;

  if (!r.standard_characters.empty()) {
    json ch = json::object();
    for (const auto& [f, c] : r.standard_characters) ch[subset_to_key(f)] = character_to_json(c);
    j["standard_characters"] = ch;
  }
  if (!r.simple_characters.empty()) {
    json ch = json::object();
    for (const auto& [f, c] : r.simple_characters) ch[subset_to_key(f)] = character_to_json(c);
    j["simple_characters"] = ch;
  }
  if (!r.decomposition.empty()) {
    json arr = json::array();
    for (const auto& e : r.decomposition)
      arr.push_back({{"standard", subset_to_array(e.standard_flat)},
                     {"simple", subset_to_array(e.simple_flat)},
                     {"mult", e.mult}});
    j["decomposition"] = arr;
  }
  if (!r.bad_primes.empty() || !r.zero_sum_pairs.empty()) {
    j["bad_primes"] = r.bad_primes;
    if (!r.zero_sum_pairs.empty()) {
      json arr = json::array();
      for (auto [e, f] : r.zero_sum_pairs)
        arr.push_back({{"from", subset_to_array(e)}, {"to", subset_to_array(f)}});
      j["zero_sum_pairs"] = arr;
    }
  }
  if (!r.determinants.empty()) {
    json arr = json::array();
    for (const auto& rec : r.determinants) {
      json factors = json::array();
      for (const auto& f : rec.factors)
        factors.push_back({{"flat", subset_to_array(f.flat)},
                           {"base", f.base.str()},
                           {"exponent", f.exponent}});
      arr.push_back({{"from", subset_to_array(rec.lower)},
                     {"to", subset_to_array(rec.upper)},
                     {"factors", factors},
                     {"predicted", rat_to_string(rec.predicted)},
                     {"gram_det", rat_to_string(rec.gram)},
                     {"match", rec.match}});
    }
    j["determinants"] = arr;
  }
  if (r.identities) {
    j["identities"] = {{"dimension_identity", r.identities->dimension_identity},
                       {"springer_refinement", r.identities->springer_refinement},
                       {"tutte_convolution", r.identities->tutte_convolution},
                       {"bases_count", r.identities->bases_count},
                       {"flat_sum", r.identities->flat_sum},
                       {"springer_sum", r.identities->springer_sum}};
  }
  if (r.axioms) {
    j["axioms"] = {{"A1", r.axioms->a1},
                   {"A2", r.axioms->a2},
                   {"A3", r.axioms->a3},
                   {"subrings", r.axioms->subrings},
                   {"u_perp_ucheck", r.axioms->u_perp_ucheck},
                   {"uperp_is_im_delta_h", r.axioms->uperp_is_im_delta_h},
                   {"contraction_stability", r.axioms->contraction_stability},
                   {"violations", r.axioms->violations}};
  }
  return j;
}

Report report_from_json(const json& j) {
  Report r;
  r.matroid_name = j.at("matroid").get<std::string>();
  r.n = j.at("n").get<int>();
  r.weights = j.at("weights").get<std::vector<std::int64_t>>();
  r.field = j.at("field").get<std::string>();
  r.p = j.contains("p") ? j.at("p").get<std::int64_t>() : 0;
  for (const auto& f : j.at("flats")) r.flats.push_back(subset_from_array(f));
  if (j.contains("standard_characters"))
    for (auto it = j["standard_characters"].begin(); it != j["standard_characters"].end(); ++it)
      r.standard_characters[subset_from_key(it.key())] = character_from_json(it.value());
  if (j.contains("simple_characters"))
    for (auto it = j["simple_characters"].begin(); it != j["simple_characters"].end(); ++it)
      r.simple_characters[subset_from_key(it.key())] = character_from_json(it.value());
  if (j.contains("decomposition"))
    for (const auto& e : j["decomposition"])
      r.decomposition.push_back({subset_from_array(e.at("standard")),
                                 subset_from_array(e.at("simple")),
                                 e.at("mult").get<long long>()});
  if (j.contains("bad_primes"))
    r.bad_primes = j["bad_primes"].get<std::vector<std::int64_t>>();
  if (j.contains("zero_sum_pairs"))
    for (const auto& e : j["zero_sum_pairs"])
      r.zero_sum_pairs.emplace_back(subset_from_array(e.at("from")),
                                    subset_from_array(e.at("to")));
  if (j.contains("determinants"))
    for (const auto& e : j["determinants"]) {
      Report::DetRecord rec;
      rec.lower = subset_from_array(e.at("from"));
      rec.upper = subset_from_array(e.at("to"));
      for (const auto& f : e.at("factors"))
        rec.factors.push_back({subset_from_array(f.at("flat")),
                               Int(f.at("base").get<std::string>()),
                               f.at("exponent").get<long long>()});
      rec.predicted = rat_from_string(e.at("predicted").get<std::string>());
      rec.gram = rat_from_string(e.at("gram_det").get<std::string>());
      rec.match = e.at("match").get<bool>();
      r.determinants.push_back(std::move(rec));
    }
  if (j.contains("identities")) {
    Report::IdentitySummary s;
    const auto& ji = j["identities"];
    s.dimension_identity = ji.at("dimension_identity").get<bool>();
    s.springer_refinement = ji.at("springer_refinement").get<bool>();
    s.tutte_convolution = ji.at("tutte_convolution").get<bool>();
    s.bases_count = ji.at("bases_count").get<long long>();
    s.flat_sum = ji.at("flat_sum").get<long long>();
    s.springer_sum = ji.at("springer_sum").get<long long>();
    r.identities = s;
  }
  if (j.contains("axioms")) {
    Report::AxiomSummary s;
    const auto& ja = j["axioms"];
    s.a1 = ja.at("A1").get<bool>();
    s.a2 = ja.at("A2").get<bool>();
    s.a3 = ja.at("A3").get<bool>();
    s.subrings = ja.at("subrings").get<bool>();
    s.u_perp_ucheck = ja.at("u_perp_ucheck").get<bool>();
    s.uperp_is_im_delta_h = ja.at("uperp_is_im_delta_h").get<bool>();
    s.contraction_stability = ja.at("contraction_stability").get<bool>();
    s.violations = ja.at("violations").get<std::vector<std::string>>();
    r.axioms = s;
  }
  return r;
}

std::string render_text(const Report& r) {
  std::ostringstream out;
  out << "matroid " << r.matroid_name << "  (n=" << r.n << ", field=" << r.field;
  if (r.field == "Fp") out << ", p=" << r.p;
  out << ")\n";
  out << "weights:";
  for (auto w : r.weights) out << " " << w;
  out << "\n";
  out << "cyclic flats (" << r.flats.size() << "):";
  for (Subset f : r.flats) out << " " << subset_to_string(f);
  out << "\n";
  if (!r.standard_characters.empty()) {
    out << "standard characters:\n";
    for (const auto& [f, c] : r.standard_characters)
      out << "  ch Delta" << subset_to_string(f) << " = " << c.to_string() << "\n";
  }
  if (!r.simple_characters.empty()) {
    out << "simple characters:\n";
    for (const auto& [f, c] : r.simple_characters)
      out << "  ch L" << subset_to_string(f) << " = " << c.to_string() << "\n";
  }
  if (!r.decomposition.empty()) {
    out << "decomposition multiplicities [Delta:L]:\n";
    for (const auto& e : r.decomposition)
      out << "  [Delta" << subset_to_string(e.standard_flat) << " : L"
          << subset_to_string(e.simple_flat) << "] = " << e.mult << "\n";
  }
  if (!r.bad_primes.empty() || !r.zero_sum_pairs.empty()) {
    out << "bad primes:";
    for (auto p : r.bad_primes) out << " " << p;
    out << "\n";
    for (auto [e, f] : r.zero_sum_pairs)
      out << "  weight sum vanishes on " << subset_to_string(e) << " -> " << subset_to_string(f)
          << " (degenerate over every field)\n";
  }
  if (!r.determinants.empty()) {
    out << "Gram determinants on U:\n";
    for (const auto& rec : r.determinants) {
      out << "  " << subset_to_string(rec.lower) << " -> " << subset_to_string(rec.upper)
          << ": det = " << rat_to_string(rec.gram) << ", predicted = "
          << rat_to_string(rec.predicted) << (rec.match ? "  [match]" : "  [mismatch]") << "\n";
      for (const auto& f : rec.factors)
        out << "    factor (" << f.base.str() << ")^" << f.exponent << " from flat "
            << subset_to_string(f.flat) << "\n";
    }
  }
  if (r.identities) {
    out << "identity checks:\n";
    out << "  dimension identity: " << (r.identities->dimension_identity ? "pass" : "FAIL")
        << " (" << r.identities->bases_count << " bases vs flat sum " << r.identities->flat_sum
        << ")\n";
    out << "  kernel-dimension refinement: "
        << (r.identities->springer_refinement ? "pass" : "FAIL") << " (sum "
        << r.identities->springer_sum << ")\n";
    out << "  Tutte convolution: " << (r.identities->tutte_convolution ? "pass" : "FAIL") << "\n";
  }
  if (r.axioms) {
    auto line = [&](const char* name, bool v) {
      out << "  " << name << ": " << (v ? "pass" : "FAIL") << "\n";
    };
    out << "axiom checks:\n";
    line("A1 (triangularity, units)", r.axioms->a1);
    line("A2 (orthogonal complements)", r.axioms->a2);
    line("A3 (associativity of contraction)", r.axioms->a3);
    line("subring closure", r.axioms->subrings);
    line("U perp Ucheck", r.axioms->u_perp_ucheck);
    line("U^perp = Im delta_h", r.axioms->uperp_is_im_delta_h);
    line("contraction stability", r.axioms->contraction_stability);
    for (const auto& v : r.axioms->violations) out << "    violation: " << v << "\n";
  }
  return out.str();
}

}  // namespace matschur
