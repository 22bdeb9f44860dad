#include "tropent/io.hpp"

#include <sstream>
#include <stdexcept>

namespace tropent {

namespace {

std::vector<long long> ints_from(const json& j) {
  if (!j.is_array()) throw std::invalid_argument("expected an integer array");
  std::vector<long long> v;
  for (const auto& e : j) {
    if (!e.is_number_integer()) throw std::invalid_argument("expected an integer array");
    v.push_back(e.get<long long>());
  }
  return v;
}

Rat rat_from(const json& j) {
  if (j.is_number_integer()) return Rat(j.get<long long>());
  if (j.is_string()) return parse_rat(j.get<std::string>());
  throw std::invalid_argument("expected a rational as \"p/q\" string or integer");
}

json point2_json(const Point2& p) { return json::array({p.x, p.y}); }

}  // namespace

json poly_to_json(const TropicalPolynomial& f) {
  json ms = json::array();
  for (const auto& m : f.monomials())
    ms.push_back({{"coeff", rat_str(m.coeff)}, {"exp", m.exponents}});
  return {{"n", f.n()}, {"monomials", std::move(ms)}};
}

TropicalPolynomial poly_from_json(const json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("monomials"))
    throw std::invalid_argument("polynomial JSON needs \"n\" and \"monomials\"");
  const int n = j.at("n").get<int>();
  std::vector<TropicalMonomial> ms;
  for (const auto& m : j.at("monomials")) {
    TropicalMonomial mono{rat_from(m.at("coeff")), ints_from(m.at("exp"))};
    if (static_cast<int>(mono.exponents.size()) != n)
      throw std::invalid_argument("monomial exponent vector has wrong length");
    ms.push_back(std::move(mono));
  }
  return TropicalPolynomial(n, std::move(ms));
}

json system_to_json(const TropicalLinearSystem& system) {
  json eqs = json::array();
  for (std::size_t i = 0; i < system.equations.size(); ++i) {
    json terms = json::array();
    for (const auto& t : system.equations[i].terms)
      terms.push_back({{"c", rat_str(t.c)}, {"k", system.window.unflatten(t.var)}});
    json eq = {{"terms", std::move(terms)}};
    if (i < system.provenance.size()) {
      eq["source"] = system.provenance[i].source;
      eq["shift"] = system.provenance[i].shift;
    }
    eqs.push_back(std::move(eq));
  }
  json out = {{"n", system.window.n}, {"N", system.window.N}, {"equations", std::move(eqs)}};
  if (!system.sources.empty()) {
    json gens = json::array();
    for (const auto& g : system.sources) gens.push_back(poly_to_json(g));
    out["gens"] = std::move(gens);
  }
  return out;
}

TropicalLinearSystem system_from_json(const json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("N") || !j.contains("equations"))
    throw std::invalid_argument("system JSON needs \"n\", \"N\" and \"equations\"");
  TropicalLinearSystem system;
  system.window = {j.at("n").get<int>(), j.at("N").get<long long>()};
  if (system.window.n < 1 || system.window.N < 1)
    throw std::invalid_argument("system JSON: n and N must be positive");
  for (const auto& eq : j.at("equations")) {
    TropicalLinearEquation e;
    for (const auto& t : eq.at("terms")) {
      auto k = ints_from(t.at("k"));
      if (!system.window.contains(k))
        throw std::invalid_argument("system JSON: grid point outside the window");
      e.terms.push_back({rat_from(t.at("c")), system.window.flatten(k)});
    }
    if (e.terms.size() < 2)
      throw std::invalid_argument("system JSON: equation needs at least two terms");
    EquationProvenance prov;
    if (eq.contains("source")) prov.source = eq.at("source").get<int>();
    if (eq.contains("shift")) prov.shift = ints_from(eq.at("shift"));
    system.equations.push_back(std::move(e));
    system.provenance.push_back(std::move(prov));
  }
  if (j.contains("gens"))
    for (const auto& g : j.at("gens")) system.sources.push_back(poly_from_json(g));
  return system;
}

json grid_point_to_json(int n, long long N, const std::vector<Rat>& w) {
  json vals = json::array();
  for (const auto& v : w) vals.push_back(rat_str(v));
  return {{"n", n}, {"N", N}, {"values", std::move(vals)}};
}

std::vector<Rat> grid_point_from_json(const json& j, int& n, long long& N) {
  if (!j.is_object() || !j.contains("n") || !j.contains("N") || !j.contains("values"))
    throw std::invalid_argument("grid point JSON needs \"n\", \"N\" and \"values\"");
  n = j.at("n").get<int>();
  N = j.at("N").get<long long>();
  Window window{n, N};
  std::vector<Rat> w;
  for (const auto& v : j.at("values")) w.push_back(rat_from(v));
  if (static_cast<long long>(w.size()) != window.var_count())
    throw std::invalid_argument("grid point JSON: wrong number of values");
  return w;
}

json forms_to_json(const std::vector<std::vector<Rat>>& forms,
                   const std::vector<Rat>* offsets) {
  json fs = json::array();
  for (const auto& f : forms) {
    json row = json::array();
    for (const auto& c : f) row.push_back(rat_str(c));
    fs.push_back(std::move(row));
  }
  json out = {{"n", forms.empty() ? 0 : static_cast<int>(forms[0].size())},
              {"forms", std::move(fs)}};
  if (offsets) {
    json os = json::array();
    for (const auto& c : *offsets) os.push_back(rat_str(c));
    out["offsets"] = std::move(os);
  }
  return out;
}

void forms_from_json(const json& j, std::vector<std::vector<Rat>>& forms,
                     std::vector<Rat>* offsets) {
  if (!j.is_object() || !j.contains("forms"))
    throw std::invalid_argument("forms JSON needs \"forms\"");
  forms.clear();
  for (const auto& row : j.at("forms")) {
    std::vector<Rat> f;
    for (const auto& c : row) f.push_back(rat_from(c));
    forms.push_back(std::move(f));
    if (forms.back().size() != forms.front().size())
      throw std::invalid_argument("forms JSON: rows of unequal length");
  }
  if (forms.empty()) throw std::invalid_argument("forms JSON: no forms");
  if (offsets) {
    offsets->clear();
    if (j.contains("offsets"))
      for (const auto& c : j.at("offsets")) offsets->push_back(rat_from(c));
    if (!offsets->empty() && offsets->size() != forms.size())
      throw std::invalid_argument("forms JSON: offsets/forms length mismatch");
  }
}

json dim_result_to_json(const DimResult& r) {
  json out = {{"dim", r.dim},
              {"explored", r.cells_explored},
              {"pruned", r.cells_pruned},
              {"elapsed_ms", r.elapsed_ms},
              {"complete", r.complete}};
  if (r.witness_pattern) {
    json wp = json::array();
    for (const auto& [p, q] : *r.witness_pattern) wp.push_back(json::array({p, q}));
    out["witness_pattern"] = std::move(wp);
  } else {
    out["witness_pattern"] = nullptr;
  }
  return out;
}

json sweep_outcome_to_json(const SweepOutcome& out, const Window& window,
                           const std::vector<Rat>& w) {
  json j;
  if (out.certificate) {
    j["outcome"] = "certificate";
    json steps = json::array();
    for (const auto& s : out.certificate->steps) {
      json pts = json::array();
      for (const auto& p : s.line_points) pts.push_back(point2_json(p));
      json vals = json::array();
      for (const auto& v : s.values) vals.push_back(rat_str(v));
      steps.push_back({{"normal", point2_json(s.outer_normal)},
                       {"level", s.line_level},
                       {"points", std::move(pts)},
                       {"values", std::move(vals)}});
    }
    j["steps"] = std::move(steps);
    j["distinct_values"] = out.certificate->distinct_values;
  } else {
    const auto& cx = *out.counterexample;
    j["outcome"] = "counterexample";
    j["g"] = poly_to_json(cx.g);
    j["violated_at"] = point2_json(cx.violated_at);
    json terms = json::array();
    for (const auto& m : cx.g.monomials()) {
      Rat v = w[window.flatten(m.exponents)] + m.coeff;
      terms.push_back({{"exp", m.exponents}, {"value", rat_str(v)}});
    }
    j["term_values"] = std::move(terms);
  }
  return j;
}

json fit_to_json(const MaxPlusFit& fit) {
  json offs = json::array();
  for (const auto& c : fit.offsets) offs.push_back(rat_str(c));
  return {{"offsets", std::move(offs)}, {"deficiency", fit.deficiency}};
}

json probe_to_json(const ProbeResult& probe) {
  json j;
  j["violated"] = probe.violated_generator.has_value();
  if (probe.violated_generator) {
    j["g"] = poly_to_json(*probe.violated_generator);
    j["violated_at"] = *probe.violated_at;
  }
  json terms = json::array();
  for (const auto& t : probe.transcript.terms)
    terms.push_back({{"exp", t.exponent},
                     {"coeff", rat_str(t.coeff)},
                     {"value", rat_str(t.lin_value)}});
  j["terms"] = std::move(terms);
  j["min_count"] = probe.transcript.min_count;
  j["notes"] = probe.transcript.notes;
  return j;
}

const char* entry_status_name(EntryStatus s) {
  switch (s) {
    case EntryStatus::Complete: return "complete";
    case EntryStatus::Partial: return "partial";
    case EntryStatus::EmptyWindow: return "empty-window";
  }
  return "?";
}

std::string entropy_csv(const EntropySequence& seq) {
  std::ostringstream os;
  os << "N,dim,ratio_exact,ratio_decimal,status\n";
  for (const auto& e : seq.entries)
    os << e.N << ',' << e.dim << ',' << rat_str(e.ratio) << ','
       << rat_double(e.ratio) << ',' << entry_status_name(e.status) << '\n';
  return os.str();
}

json bracket_to_json(const EntropyBracket& bracket) {
  json entries = json::array();
  for (const auto& e : bracket.upper_sequence.entries)
    entries.push_back({{"N", e.N},
                       {"dim", e.dim},
                       {"ratio_exact", rat_str(e.ratio)},
                       {"ratio_decimal", rat_double(e.ratio)},
                       {"status", entry_status_name(e.status)}});
  json j = {{"target", bracket.target},
            {"lower_exact", rat_str(bracket.lower)},
            {"lower_decimal", rat_double(bracket.lower)},
            {"lower_witness", bracket.lower_witness},
            {"lower_is_asymptotic", bracket.lower_is_asymptotic},
            {"entries", std::move(entries)}};
  if (bracket.upper) {
    j["upper_exact"] = rat_str(*bracket.upper);
    j["upper_decimal"] = rat_double(*bracket.upper);
  } else {
    j["upper_exact"] = nullptr;
    j["upper_decimal"] = nullptr;
  }
  return j;
}

}  // namespace tropent
