#include "pelltrib/search.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <map>
#include <set>
#include <thread>

#include "pelltrib/tribonacci.hpp"

namespace pelltrib {

void SearchConfig::validate() const {
  if (m1_max < 1 || n1_max < 1 || m2_check_max < 1) {
    throw DomainError("search ranges must be positive");
  }
  if (jobs < 1) throw DomainError("jobs must be >= 1");
  if (M_reduction < 1) throw DomainError("M_reduction must be >= 1");
  if (convergent_budget < 1) throw DomainError("convergent budget must be >= 1");
  policy.validate();
  parse_decimal(A);
  parse_decimal(B);
}

std::optional<mpz_class> solve_p_eps(int epsilon, std::size_t n, const mpz_class& target) {
  if (target < 1 || n < 1) return std::nullopt;
  mpz_class lo = 1, hi;
  const mpz_class twice = 2 * target;
  mpz_root(hi.get_mpz_t(), twice.get_mpz_t(), n);
  hi += 1;
  while (lo < hi) {
    mpz_class mid = (lo + hi) / 2;
    if (p_eps(epsilon, n, mid) < target) {
      lo = mid + 1;
    } else {
      hi = mid;
    }
  }
  if (p_eps(epsilon, n, lo) == target) return lo;
  return std::nullopt;
}

std::vector<SmallSolution> solve_small(const SearchConfig& config) {
  config.validate();
  const TribCache t(config.m1_max);
  std::vector<SmallSolution> out;
  for (int eps : {1, -1}) {
    for (std::size_t n = 2; n <= config.n1_max; ++n) {
      for (std::size_t m = n + 1; m <= config.m1_max; ++m) {
        auto x = solve_p_eps(eps, n, t[m]);
        if (!x) continue;
        if (eps == 1 && *x == 1) continue;  // X^2 - d Y^2 = 1 with X = 1 forces Y = 0
        out.push_back({eps, n, m, *x});
      }
    }
  }
  return out;
}

std::vector<std::pair<std::size_t, std::size_t>> membership_pairs(const mpz_class& x1, int epsilon,
                                                                  std::size_t m_max) {
  const TribCache t(m_max);
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  const auto xs = x_coordinates_up_to(x1, epsilon, t[m_max]);
  for (std::size_t i = 0; i < xs.size(); ++i) {
    for (std::size_t m : t.indices_of(xs[i])) {
      if (m >= 1) pairs.emplace_back(i + 1, m);
    }
  }
  return pairs;
}

namespace {

void annotate_d(SolutionRecord& rec, const SearchConfig& config) {
  if (!config.factor) return;
  const mpz_class disc = rec.X1 * rec.X1 - rec.epsilon;
  const SqfreeDecomposition sq = sqfree_decompose(disc, config.factoring);
  if (!sq.complete) return;
  rec.d = sq.d;
  rec.Y1 = sq.y;
}

// Exact re-check of every pair through the Pell recurrence built from (d, Y1).
void cross_check(const SolutionRecord& rec) {
  for (const auto& [n, m] : rec.pairs) {
    mpz_class x;
    if (rec.d && rec.Y1) {
      FundamentalSolution f;
      f.d = *rec.d;
      f.x1 = rec.X1;
      f.y1 = *rec.Y1;
      f.epsilon = rec.epsilon;
      if (f.x1 * f.x1 - f.d * f.y1 * f.y1 != f.epsilon) {
        throw Discrepancy("X1 = " + rec.X1.get_str() + " does not solve the Pell equation for d = " +
                          f.d.get_str());
      }
      x = x_coordinate(f, n);
    } else {
      x = p_eps(rec.epsilon, n, rec.X1);
    }
    if (x != trib(m)) {
      throw Discrepancy("pair (" + std::to_string(n) + ", " + std::to_string(m) +
                        ") fails X_n = T_m for X1 = " + rec.X1.get_str());
    }
  }
}

ReductionInstance instance_for(const mpz_class& x1, int epsilon, const SearchConfig& config) {
  const BinetConstants& bc = default_binet_constants();
  ReductionInstance in;
  in.kappa = log(delta_from_x1(x1, epsilon)) / bc.log_alpha;
  in.mu = bc.chi;
  in.M = config.M_reduction;
  in.A = CertifiedReal::from_decimal(config.A);
  in.B = CertifiedReal::from_decimal(config.B);
  return in;
}

}  // namespace

HomogeneousBound homogeneous_bound(const mpz_class& x1, int epsilon, std::size_t m1,
                                   const SearchConfig& config) {
  const BinetConstants& bc = default_binet_constants();
  const PrecisionPolicy& policy = config.policy;
  const CertifiedReal kappa = log(delta_from_x1(x1, epsilon)) / bc.log_alpha;
  HomogeneousBound h;
  // X1 = T_m1 ~ a alpha^(m1+1), so the n = 1 form is kappa - (m1 + 1) + chi
  h.lambda1 = kappa - CertifiedReal(static_cast<unsigned long>(m1) + 1) + bc.chi;
  const CFExpansion cf = expand_until_q_exceeds(kappa, config.M_reduction, policy);
  const ApproxBound ab = approx_lower_bound(cf, config.M_reduction);
  h.c = ab.c;
  h.a_max = ab.a_max;
  const CertifiedReal gap = CertifiedReal::from_rational(h.c) /
                                CertifiedReal::from_integer(config.M_reduction) -
                            abs(h.lambda1);
  if (certify_sign(gap, policy) < 0) {
    throw DomainError("c / x_max does not dominate |lambda1|");
  }
  h.m2_bound = log(CertifiedReal::from_decimal(config.A) / gap) /
               log(CertifiedReal::from_decimal(config.B));
  h.max_m2 = floor_upper(h.m2_bound);
  return h;
}

namespace {

TrivialInstance run_trivial(int eps, std::size_t m1, const mpz_class& T, const SearchConfig& config) {
  TrivialInstance inst;
  inst.epsilon = eps;
  inst.m1 = m1;
  inst.T = T;
  inst.record.epsilon = eps;
  inst.record.X1 = T;
  const mpz_class disc = T * T - eps;
  if (disc <= 0) {
    inst.status = "skipped";
    inst.note = "T^2 - eps = " + disc.get_str() + ", no Pell equation";
    return inst;
  }
  if (mpz_perfect_square_p(disc.get_mpz_t())) {
    inst.status = "skipped";
    inst.note = "T^2 - eps is a perfect square";
    return inst;
  }
  try {
    inst.reduction = reduce(instance_for(T, eps, config), config.convergent_budget, config.policy);
    if (inst.reduction->max_k > config.m2_check_max) {
      inst.status = "bound-exceeds-window";
      inst.note = "m2 <= " + inst.reduction->max_k.get_str() + " exceeds the checked range";
    } else {
      inst.status = "ok";
    }
  } catch (const ReductionFailed& e) {
    inst.status = "reduction-incomplete";
    inst.note = e.what();
  }
  if (inst.status != "ok") {
    try {
      inst.homogeneous = homogeneous_bound(T, eps, m1, config);
      if (inst.homogeneous->max_m2 <= config.m2_check_max) {
        inst.note = inst.status + "; closed by the homogeneous bound m2 <= " +
                    inst.homogeneous->max_m2.get_str();
        inst.status = "ok-homogeneous";
      }
    } catch (const DomainError& e) {
      inst.note += std::string("; homogeneous bound unavailable: ") + e.what();
    } catch (const InsufficientPrecision& e) {
      inst.note += std::string("; homogeneous bound unavailable: ") + e.what();
    }
  }
  inst.record.pairs = membership_pairs(T, eps, config.m2_check_max);
  annotate_d(inst.record, config);
  cross_check(inst.record);
  return inst;
}

// Runs task(i) for i < count on `jobs` threads; results land by index.
void parallel_for(std::size_t count, unsigned jobs, const std::function<void(std::size_t)>& task) {
  if (jobs <= 1 || count <= 1) {
    for (std::size_t i = 0; i < count; ++i) task(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  std::vector<std::thread> workers;
  for (unsigned w = 0; w < std::min<std::size_t>(jobs, count); ++w) {
    workers.emplace_back([&] {
      for (std::size_t i = next++; i < count; i = next++) {
        try {
          task(i);
        } catch (...) {
          std::lock_guard<std::mutex> lock(failure_mutex);
          if (!failure) failure = std::current_exception();
        }
      }
    });
  }
  for (auto& w : workers) w.join();
  if (failure) std::rethrow_exception(failure);
}

void sort_pairs(std::vector<std::pair<std::size_t, std::size_t>>& pairs) {
  std::sort(pairs.begin(), pairs.end());
  pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());
}

}  // namespace

std::size_t TrivialSweep::count(const std::string& status) const {
  return static_cast<std::size_t>(std::count_if(
      instances.begin(), instances.end(), [&](const auto& i) { return i.status == status; }));
}

std::size_t TrivialSweep::completed() const {
  return count("ok") + count("ok-homogeneous") + count("skipped");
}

std::size_t TrivialSweep::flagged() const { return instances.size() - completed(); }

TrivialSweep trivial_case_sweep(const SearchConfig& config) {
  config.validate();
  const TribCache t(config.m1_max);
  std::vector<std::pair<int, std::size_t>> tasks;
  for (int eps : {1, -1}) {
    for (std::size_t m1 = 1; m1 <= config.m1_max; ++m1) tasks.emplace_back(eps, m1);
  }
  default_binet_constants();  // build shared constants before any worker starts
  TrivialSweep sweep;
  sweep.instances.resize(tasks.size());
  parallel_for(tasks.size(), config.jobs, [&](std::size_t i) {
    const auto [eps, m1] = tasks[i];
    sweep.instances[i] = run_trivial(eps, m1, t[m1], config);
  });
  return sweep;
}

mpz_class n1_bound_from_m1(const mpz_class& m1, const CertifiedReal& delta,
                           const PrecisionPolicy& policy) {
  if (m1 < 1) throw DomainError("n1_bound_from_m1: m1 must be >= 1");
  if (!certify_less(CertifiedReal::from_decimal("2.4142"), delta, policy)) {
    throw DomainError("n1_bound_from_m1: delta must be >= 1 + sqrt 2");
  }
  const CertifiedReal b = CertifiedReal::from_integer(m1) * default_binet_constants().log_alpha /
                          log(delta);
  return floor_upper(b);
}

bool CutoffReport::all_certified() const {
  return std::all_of(steps.begin(), steps.end(), [](const ChainStep& s) { return s.certified; });
}

namespace {

ChainStep check_less(std::string id, std::string claim, const CertifiedReal& lhs,
                     const CertifiedReal& rhs, const PrecisionPolicy& policy) {
  ChainStep s{std::move(id), std::move(claim), lhs.to_decimal(15), false};
  try {
    s.certified = certify_less(lhs, rhs, policy);
  } catch (const InsufficientPrecision&) {
  }
  return s;
}

CutoffReport cutoff_with(const std::optional<mpq_class>& c_override, const PrecisionPolicy& policy) {
  const BinetConstants& bc = default_binet_constants();
  CutoffReport r;
  r.x_max = mpz_class("10000000000000000");
  const CFExpansion exp = expand_until_q_exceeds(bc.chi, r.x_max, policy);
  const ApproxBound ab = approx_lower_bound(exp, r.x_max);
  r.a_max = ab.a_max;
  r.K = ab.K;
  r.c = c_override ? *c_override : ab.c;

  const CertifiedReal x = CertifiedReal::from_integer(r.x_max);
  const CertifiedReal c = CertifiedReal::from_rational(r.c);
  // c/n2 < 18 n2 / (alpha^(3 m1/2) log alpha)  =>  alpha^(3 m1/2) < 18 n2^2 / (c log alpha)
  r.m1_bound = CertifiedReal::from_rational(mpq_class(2, 3)) *
               log(CertifiedReal(18) * x * x / (c * bc.log_alpha)) / bc.log_alpha;
  r.cutoff = floor_upper(r.m1_bound);

  const CertifiedReal a151 = pow(bc.alpha, 151) * sqrt(bc.alpha);
  r.steps.push_back(check_less("alpha_pow_151_5", "6e33 < alpha^151.5",
                               CertifiedReal::from_decimal("6e33"), a151, policy));
  ChainStep sq{"six_e33", "60 * (1e16)^2 <= 6e33", "6e33", 60 * r.x_max * r.x_max <= mpz_class("6000000000000000000000000000000000")};
  r.steps.push_back(sq);
  r.steps.push_back(check_less("sixty", "36 / log alpha < 60", CertifiedReal(36) / bc.log_alpha,
                               CertifiedReal(60), policy));
  r.steps.push_back(check_less("log_alpha", "log alpha < 0.61", bc.log_alpha,
                               CertifiedReal::from_decimal("0.61"), policy));
  return r;
}

}  // namespace

CutoffReport m1_cutoff_via_cf(const PrecisionPolicy& policy) { return cutoff_with(std::nullopt, policy); }

CutoffReport m1_cutoff_via_cf(const mpq_class& c, const PrecisionPolicy& policy) {
  if (c <= 0) throw DomainError("m1_cutoff_via_cf: c must be positive");
  return cutoff_with(c, policy);
}

bool is_expected_exceptional_set(const std::vector<SolutionRecord>& records) {
  using Pairs = std::vector<std::pair<std::size_t, std::size_t>>;
  struct Expected {
    int eps;
    long x1;
    long d;
    Pairs pairs;
  };
  const std::vector<Expected> expected = {
      {1, 2, 3, {{1, 3}, {2, 5}}},
      {-1, 1, 2, {{1, 1}, {1, 2}, {3, 5}}},
  };
  std::vector<const SolutionRecord*> exceptional;
  for (const auto& r : records) {
    if (r.pairs.size() >= 2) exceptional.push_back(&r);
  }
  if (exceptional.size() != expected.size()) return false;
  for (const auto& e : expected) {
    const auto it = std::find_if(exceptional.begin(), exceptional.end(), [&](const SolutionRecord* r) {
      return r->epsilon == e.eps && r->X1 == e.x1;
    });
    if (it == exceptional.end()) return false;
    Pairs got = (*it)->pairs;
    sort_pairs(got);
    if (got != e.pairs) return false;
    if ((*it)->d && *(*it)->d != e.d) return false;
  }
  return true;
}

TheoremReport verify_theorem(const SearchConfig& config) {
  config.validate();
  const PrecisionPolicy& policy = config.policy;
  TheoremReport rep;
  rep.bounds = derive_lemma_jb0(policy);
  rep.cutoff = m1_cutoff_via_cf(policy);
  rep.n1_bound = n1_bound_from_m1(config.m1_max, CertifiedReal(1) + sqrt(CertifiedReal(2)), policy);
  rep.small = solve_small(config);

  std::vector<NontrivialCase> cases(rep.small.size());
  parallel_for(rep.small.size(), config.jobs, [&](std::size_t i) {
    const SmallSolution& s = rep.small[i];
    NontrivialCase nc;
    nc.solution = s;
    nc.reduction = reduce(instance_for(s.X1, s.epsilon, config), config.convergent_budget, policy);
    nc.record.epsilon = s.epsilon;
    nc.record.X1 = s.X1;
    nc.record.pairs = membership_pairs(s.X1, s.epsilon, config.m2_check_max);
    annotate_d(nc.record, config);
    cross_check(nc.record);
    cases[i] = std::move(nc);
  });
  rep.nontrivial = std::move(cases);
  rep.sweep = trivial_case_sweep(config);

  std::map<std::pair<int, mpz_class>, SolutionRecord> merged;
  auto merge = [&](const SolutionRecord& r) {
    auto [it, fresh] = merged.try_emplace({r.epsilon, r.X1}, r);
    if (!fresh) {
      auto& dst = it->second.pairs;
      dst.insert(dst.end(), r.pairs.begin(), r.pairs.end());
      if (!it->second.d && r.d) {
        it->second.d = r.d;
        it->second.Y1 = r.Y1;
      }
    }
    sort_pairs(it->second.pairs);
  };
  for (const auto& nc : rep.nontrivial) merge(nc.record);
  for (const auto& inst : rep.sweep.instances) {
    if (inst.status != "skipped") merge(inst.record);
  }
  // records sorted by (eps desc, X1)
  for (int eps : {1, -1}) {
    for (const auto& [key, rec] : merged) {
      if (key.first == eps && rec.pairs.size() >= 2) rep.records.push_back(rec);
    }
  }

  rep.notes.push_back("trivial case takes X1 = T_m1 as the fundamental solution, delta = T + sqrt(T^2 - eps)");
  for (const auto& inst : rep.sweep.instances) {
    if (inst.status != "ok") {
      rep.notes.push_back("eps = " + std::to_string(inst.epsilon) + ", m1 = " + std::to_string(inst.m1) +
                          ": " + inst.status + (inst.note.empty() ? "" : " (" + inst.note + ")"));
    }
  }

  bool ok = rep.bounds.all_certified() && rep.cutoff.all_certified();
  ok = ok && rep.cutoff.cutoff <= config.m1_max && rep.n1_bound <= config.n1_max;
  ok = ok && rep.sweep.flagged() == 0;
  for (const auto& nc : rep.nontrivial) ok = ok && nc.reduction.max_k <= config.m2_check_max;
  rep.matches_theorem = ok && is_expected_exceptional_set(rep.records);
  return rep;
}

}  // namespace pelltrib
