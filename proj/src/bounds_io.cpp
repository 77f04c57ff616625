#include "chowbound/bounds_io.hpp"

#include <sstream>

#include <json.hpp>

namespace chowbound {

namespace {

using json = nlohmann::ordered_json;

json factored_to_json(const FactoredInt& f) {
  json factors = json::object();
  for (const auto& [p, e] : f.factors) factors[p.str()] = e;
  return json{{"value", f.value.str()}, {"factors", std::move(factors)}};
}

FactoredInt factored_from_json(const json& j) {
  std::map<BigInt, unsigned> factors;
  for (const auto& [key, val] : j.at("factors").items())
    factors.emplace(BigInt(key), val.get<unsigned>());
  return FactoredInt::from_parts(BigInt(j.at("value").get<std::string>()), std::move(factors));
}

json prime_bound_to_json(const PrimeBound& pb) {
  json j{{"ell", pb.ell.str()}, {"bound", pb.bound}, {"source", pb.source}};
  if (pb.fzip_valuation) j["fzip_valuation"] = *pb.fzip_valuation;
  if (pb.combined_bound) j["combined_bound"] = *pb.combined_bound;
  if (pb.mult_order) j["mult_order"] = pb.mult_order->str();
  if (pb.order_divides_2i) j["order_divides_2i"] = *pb.order_divides_2i;
  if (pb.gcd_2i_ellm1) j["gcd_2i_ellm1"] = pb.gcd_2i_ellm1->str();
  return j;
}

PrimeBound prime_bound_from_json(const json& j) {
  PrimeBound pb;
  pb.ell = BigInt(j.at("ell").get<std::string>());
  pb.bound = j.at("bound").get<int>();
  pb.source = j.at("source").get<std::string>();
  if (j.contains("fzip_valuation")) pb.fzip_valuation = j["fzip_valuation"].get<long long>();
  if (j.contains("combined_bound")) pb.combined_bound = j["combined_bound"].get<int>();
  if (j.contains("mult_order")) pb.mult_order = BigInt(j["mult_order"].get<std::string>());
  if (j.contains("order_divides_2i")) pb.order_divides_2i = j["order_divides_2i"].get<bool>();
  if (j.contains("gcd_2i_ellm1")) pb.gcd_2i_ellm1 = BigInt(j["gcd_2i_ellm1"].get<std::string>());
  return pb;
}

}  // namespace

std::string ledger_to_json(const Ledger& ledger) {
  json j;
  json ctx{{"g", ledger.context.g},
           {"d", ledger.context.d},
           {"threshold", ledger.context.threshold()}};
  ctx["char_p"] = ledger.context.char_p ? json(ledger.context.char_p->str()) : json(nullptr);
  if (ledger.context.level_n)
    ctx["level"] = *ledger.context.level_n;
  else
    ctx["level"] = nullptr;
  j["context"] = std::move(ctx);

  json entries = json::array();
  for (const BoundEntry& e : ledger.entries) {
    json je;
    je["i"] = e.i;
    je["bernoulli_indices"] = e.bernoulli_indices;
    json primes = json::array();
    for (const PrimeBound& pb : e.primes) primes.push_back(prime_bound_to_json(pb));
    je["primes"] = std::move(primes);
    je["annihilator"] = factored_to_json(e.annihilator);
    if (e.fzip)
      je["fzip"] = factored_to_json(*e.fzip);
    else if (e.fzip_omitted)
      je["fzip"] = json{{"omitted", "factorization effort cap exceeded"}};
    else
      je["fzip"] = nullptr;
    json evdg;
    evdg["candidates"] = json::array({e.evdg.candidate_full.str(), e.evdg.candidate_half.str()});
    evdg["top_class"] = e.evdg.top_class ? factored_to_json(*e.evdg.top_class) : json(nullptr);
    je["evdg"] = std::move(evdg);
    json mr = json::array();
    for (const PrimeBound& pb : e.primes)
      mr.push_back(json{{"ell", pb.ell.str()}, {"bound", pb.mr}});
    je["mr"] = std::move(mr);
    entries.push_back(std::move(je));
  }
  j["entries"] = std::move(entries);
  j["notes"] = ledger.notes;
  return j.dump(2) + "\n";
}

Ledger ledger_from_json(const std::string& json_text) {
  json j = json::parse(json_text);
  Ledger ledger;
  const json& ctx = j.at("context");
  std::optional<unsigned> level;
  if (ctx.contains("level") && !ctx["level"].is_null()) level = ctx["level"].get<unsigned>();
  std::optional<BigInt> char_p;
  if (!ctx.at("char_p").is_null()) char_p = BigInt(ctx["char_p"].get<std::string>());
  ledger.context = Context::make(ctx.at("g").get<unsigned>(), ctx.at("d").get<unsigned>(),
                                 level, char_p);
  if (ledger.context.threshold() != ctx.at("threshold").get<unsigned>())
    throw std::invalid_argument("ledger_from_json: threshold does not match 2g+d+1");
  for (const json& je : j.at("entries")) {
    BoundEntry e;
    e.i = je.at("i").get<unsigned>();
    e.bernoulli_indices = je.at("bernoulli_indices").get<std::vector<unsigned>>();
    for (const json& jp : je.at("primes")) e.primes.push_back(prime_bound_from_json(jp));
    e.annihilator = factored_from_json(je.at("annihilator"));
    const json& fz = je.at("fzip");
    if (fz.is_null()) {
      // no characteristic
    } else if (fz.contains("omitted")) {
      e.fzip_omitted = true;
    } else {
      e.fzip = factored_from_json(fz);
    }
    const json& evdg = je.at("evdg");
    e.evdg.candidate_full = BigInt(evdg.at("candidates").at(0).get<std::string>());
    e.evdg.candidate_half = BigInt(evdg.at("candidates").at(1).get<std::string>());
    if (!evdg.at("top_class").is_null())
      e.evdg.top_class = factored_from_json(evdg["top_class"]);
    // mr bounds are re-attached onto the prime rows
    for (const json& jm : je.at("mr")) {
      BigInt ell(jm.at("ell").get<std::string>());
      for (PrimeBound& pb : e.primes)
        if (pb.ell == ell) pb.mr = jm.at("bound").get<int>();
    }
    ledger.entries.push_back(std::move(e));
  }
  ledger.notes = j.at("notes").get<std::vector<std::string>>();
  return ledger;
}

namespace {

std::string indices_to_string(const std::vector<unsigned>& v) {
  std::string s = "{";
  for (size_t k = 0; k < v.size(); ++k) {
    if (k) s += ", ";
    s += std::to_string(v[k]);
  }
  return s + "}";
}

}  // namespace

std::string ledger_to_text(const Ledger& ledger, bool published_comparison) {
  std::ostringstream os;
  const Context& ctx = ledger.context;
  os << "torsion-order bound ledger\n";
  os << "  g = " << ctx.g << ", d = " << ctx.d << ", threshold 2g+d+1 = " << ctx.threshold();
  if (ctx.level_n) os << ", level " << *ctx.level_n;
  if (ctx.char_p) os << ", characteristic " << ctx.char_p->str();
  os << "\n\n";

  for (const BoundEntry& e : ledger.entries) {
    os << "c_" << 2 * e.i << "  (i = " << e.i << ")\n";
    os << "  Bernoulli indices " << indices_to_string(e.bernoulli_indices) << "\n";
    os << "  annihilator " << e.annihilator.value.str();
    if (e.annihilator.factors.size() == 1 && e.annihilator.factors.begin()->second == 1)
      os << "  (prime)";
    else if (!e.annihilator.factors.empty())
      os << " = " << e.annihilator.to_string();
    os << "\n";
    for (const PrimeBound& pb : e.primes) {
      os << "    ell = " << pb.ell.str() << ": v <= " << pb.bound << " (" << pb.source
         << "), MR v <= " << pb.mr;
      if (pb.fzip_valuation)
        os << ", v_ell(p^" << 2 * e.i << "-1) = " << *pb.fzip_valuation;
      if (pb.combined_bound) os << ", combined v <= " << *pb.combined_bound;
      if (pb.mult_order) {
        os << ", ord_ell(p) = " << pb.mult_order->str() << " "
           << (*pb.order_divides_2i ? "divides" : "does not divide") << " 2i = " << 2 * e.i;
        os << " (gcd(2i, ell-1) = " << pb.gcd_2i_ellm1->str() << ")";
      }
      os << "\n";
    }
    if (e.fzip)
      os << "    fzip: p^" << 2 * e.i << " - 1 = " << e.fzip->value.str() << " = "
         << e.fzip->to_string() << "\n";
    else if (e.fzip_omitted)
      os << "    fzip: omitted (factorization effort cap exceeded)\n";
    os << "    EvdG order in cohomology: " << e.evdg.candidate_full.str() << " or "
       << e.evdg.candidate_half.str() << "\n";
    if (e.evdg.top_class)
      os << "    top class: order divides (g-1)! * n_g = " << e.evdg.top_class->value.str()
         << " = " << e.evdg.top_class->to_string() << "\n";
  }

  if (!ledger.notes.empty()) {
    os << "\nnotes:\n";
    for (const std::string& note : ledger.notes) os << "  - " << note << "\n";
  }

  if (published_comparison) {
    os << "\npublished worked example, as printed (g = 13, level 4), next to the strict "
          "evaluation above:\n";
    const auto& extras = published_example_extras();
    os << "  coefficient ring as printed: " << extras.coefficient_ring << "\n";
    for (const PublishedExampleRow& row : published_example_rows()) {
      os << "  c_" << 2 * row.i << ": " << row.printed_value;
      if (!row.printed_factorization.empty()) os << "  [" << row.printed_factorization << "]";
      os << "\n      " << row.remark << "\n";
    }
    os << "  top class as printed: " << extras.top_class_printed << " = "
       << extras.top_class_printed_value.str() << "\n";
    os << "  aside as printed: " << extras.gcd_aside << "\n";
  }
  return os.str();
}

}  // namespace chowbound
