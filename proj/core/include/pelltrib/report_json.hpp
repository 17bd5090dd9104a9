#pragma once

// JSON views of the library's results. Objects use sorted keys and every
// arbitrary-precision integer is a decimal string, so dump(parse(s)) == s.

#include <nlohmann/json.hpp>

#include <string>

#include "pelltrib/contfrac.hpp"
#include "pelltrib/lfl_bounds.hpp"
#include "pelltrib/pell.hpp"
#include "pelltrib/reduction.hpp"
#include "pelltrib/search.hpp"
#include "pelltrib/tribonacci.hpp"

namespace pelltrib::json {

using nlohmann::json;

json interval(const Interval& x, int digits = 25);
// {"value", "lo", "hi", "bits"}
json real(const CertifiedReal& x, int digits = 30);
json rational(const mpq_class& q);

json convert(const BinetConstants& c, int digits = 30);
json convert(const FundamentalSolution& f);
json convert(const SqfreeDecomposition& s);
json convert(const CFExpansion& e);
json convert(const MaxQuotient& m);
json convert(const ApproxBound& b);
json convert(const ChainStep& s);
json convert(const LemmaPrel& p);
json convert(const DerivedBounds& b);
json convert(const ReductionOutcome& o);
json convert(const ExclusionClaim& c);
json convert(const SmallSolution& s);
json convert(const SolutionRecord& r);
json convert(const HomogeneousBound& h);
json convert(const TrivialInstance& i);
json convert(const TrivialSweep& s);
json convert(const CutoffReport& c);
json convert(const TheoremReport& r);

// Canonical text: sorted keys, two-space indent, trailing newline.
std::string dump(const json& j);

}  // namespace pelltrib::json
