#include "pelltrib/report_json.hpp"

namespace pelltrib::json {

json interval(const Interval& x, int digits) {
  return json{{"lo", x.lo().to_string(digits, MPFR_RNDD)},
              {"hi", x.hi().to_string(digits, MPFR_RNDU)}};
}

json real(const CertifiedReal& x, int digits) {
  json j = interval(x.enclosure(), digits);
  j["value"] = x.to_decimal(digits);
  j["bits"] = static_cast<long>(x.bits());
  return j;
}

json rational(const mpq_class& q) { return q.get_str(); }

json convert(const BinetConstants& c, int digits) {
  return json{{"alpha", real(c.alpha, digits)},     {"beta_abs", real(c.beta_abs, digits)},
              {"a", real(c.a, digits)},             {"b_abs", real(c.b_abs, digits)},
              {"omega1", real(c.omega1, digits)},   {"omega2", real(c.omega2, digits)},
              {"log_alpha", real(c.log_alpha, digits)}, {"chi", real(c.chi, digits)},
              {"c1", real(c.c1, digits)}};
}

json convert(const FundamentalSolution& f) {
  return json{{"d", f.d.get_str()},
              {"x1", f.x1.get_str()},
              {"y1", f.y1.get_str()},
              {"epsilon", f.epsilon},
              {"delta", real(f.delta)}};
}

json convert(const SqfreeDecomposition& s) {
  return json{{"n", s.n.get_str()}, {"d", s.d.get_str()}, {"y", s.y.get_str()}, {"complete", s.complete}};
}

json convert(const CFExpansion& e) {
  json qs = json::array(), cv = json::array();
  for (const auto& a : e.quotients) qs.push_back(a.get_str());
  for (const auto& c : e.convergents) cv.push_back(json{{"p", c.p.get_str()}, {"q", c.q.get_str()}});
  return json{{"target", real(e.target)}, {"quotients", qs}, {"convergents", cv}};
}

json convert(const MaxQuotient& m) {
  return json{{"value", m.value.get_str()}, {"index", m.index}};
}

json convert(const ApproxBound& b) {
  return json{{"c", rational(b.c)}, {"a_max", convert(b.a_max)}, {"K", b.K}};
}

json convert(const ChainStep& s) {
  return json{{"id", s.id}, {"claim", s.claim}, {"value", s.value}, {"certified", s.certified}};
}

namespace {

json steps(const std::vector<ChainStep>& v) {
  json a = json::array();
  for (const auto& s : v) a.push_back(convert(s));
  return a;
}

json pairs(const std::vector<std::pair<std::size_t, std::size_t>>& v) {
  json a = json::array();
  for (const auto& [n, m] : v) a.push_back(json::array({n, m}));
  return a;
}

}  // namespace

json convert(const LemmaPrel& p) {
  return json{{"delta", real(p.delta)},
              {"matveev_constant", real(p.matveev_constant, 20)},
              {"n_coeff", real(p.n_coeff, 20)},
              {"m_coeff", real(p.m_coeff, 20)},
              {"steps", steps(p.steps)},
              {"certified", p.all_certified()}};
}

json convert(const DerivedBounds& b) {
  return json{{"matveev_constant", real(b.matveev_constant, 20)},
              {"matveev_printed", rational(b.matveev_printed)},
              {"lemma_prel_n_coeff", rational(b.lemma_prel_n_coeff)},
              {"lemma_prel_m_coeff", rational(b.lemma_prel_m_coeff)},
              {"lmn_constant", real(b.lmn_constant, 20)},
              {"lmn_printed", rational(b.lmn_printed)},
              {"case_split", json{{"n2", b.case_split_n2.get_str()},
                                  {"m1", b.case_split_m1.get_str()},
                                  {"m1_reading12", b.case_m1_reading12.get_str()},
                                  {"m1_reading18", b.case_m1_reading18.get_str()}}},
              {"m1_coeff", rational(b.m1_coeff)},
              {"logdelta_coeff", rational(b.logdelta_coeff)},
              {"m2_implicit", b.m2_implicit.get_str()},
              {"m1_final", b.m1_final.get_str()},
              {"n2_final", b.n2_final.get_str()},
              {"m2_final", b.m2_final.get_str()},
              {"steps", steps(b.steps)},
              {"certified", b.all_certified()}};
}

json convert(const ReductionOutcome& o) {
  json tried = json::array();
  for (const auto& t : o.tried) {
    tried.push_back(json{{"index", t.index}, {"Q", t.Q.get_str()}, {"xi", t.xi}, {"sign", t.sign}});
  }
  return json{{"index", o.index},
              {"Q", o.Q.get_str()},
              {"xi", real(o.xi, 20)},
              {"threshold", real(o.threshold, 20)},
              {"k_bound", o.k_bound.get_str()},
              {"max_k", o.max_k.get_str()},
              {"bits", static_cast<long>(o.bits)},
              {"tried", tried}};
}

json convert(const ExclusionClaim& c) {
  return json{{"M", c.M.get_str()}, {"k_min", c.k_min.get_str()}, {"A", c.A}, {"B", c.B},
              {"statement", c.statement}};
}

json convert(const SmallSolution& s) {
  return json{{"epsilon", s.epsilon}, {"n1", s.n1}, {"m1", s.m1}, {"X1", s.X1.get_str()}};
}

json convert(const SolutionRecord& r) {
  return json{{"epsilon", r.epsilon},
              {"X1", r.X1.get_str()},
              {"d", r.d ? json(r.d->get_str()) : json("unresolved")},
              {"Y1", r.Y1 ? json(r.Y1->get_str()) : json(nullptr)},
              {"pairs", pairs(r.pairs)}};
}

json convert(const HomogeneousBound& h) {
  return json{{"lambda1", real(h.lambda1, 20)},
              {"c", rational(h.c)},
              {"a_max", convert(h.a_max)},
              {"m2_bound", real(h.m2_bound, 20)},
              {"max_m2", h.max_m2.get_str()}};
}

json convert(const TrivialInstance& i) {
  return json{{"epsilon", i.epsilon},
              {"homogeneous", i.homogeneous ? convert(*i.homogeneous) : json(nullptr)},
              {"m1", i.m1},
              {"T", i.T.get_str()},
              {"status", i.status},
              {"note", i.note},
              {"reduction", i.reduction ? convert(*i.reduction) : json(nullptr)},
              {"record", convert(i.record)}};
}

json convert(const TrivialSweep& s) {
  json a = json::array();
  for (const auto& i : s.instances) a.push_back(convert(i));
  return json{{"instances", a}, {"completed", s.completed()}, {"flagged", s.flagged()}};
}

json convert(const CutoffReport& c) {
  return json{{"x_max", c.x_max.get_str()},
              {"c", rational(c.c)},
              {"a_max", convert(c.a_max)},
              {"K", c.K},
              {"m1_bound", real(c.m1_bound, 20)},
              {"cutoff", c.cutoff.get_str()},
              {"steps", steps(c.steps)},
              {"certified", c.all_certified()}};
}

json convert(const TheoremReport& r) {
  json nontrivial = json::array(), certificates = json::array(), records = json::array();
  for (const auto& s : r.small) nontrivial.push_back(convert(s));
  for (const auto& nc : r.nontrivial) {
    json c = convert(nc.reduction);
    c["source"] = convert(nc.solution);
    certificates.push_back(c);
  }
  for (const auto& rec : r.records) records.push_back(convert(rec));
  return json{{"bounds", convert(r.bounds)},
              {"cutoffs", json{{"m1", convert(r.cutoff)}, {"n1", r.n1_bound.get_str()}}},
              {"nontrivial", nontrivial},
              {"records", records},
              {"certificates", certificates},
              {"sweep", convert(r.sweep)},
              {"notes", r.notes},
              {"matches_theorem", r.matches_theorem}};
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

}  // namespace pelltrib::json
