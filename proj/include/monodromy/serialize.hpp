// JSON views of the exact objects and reports.  Every numeric leaf is
// tagged: exact values carry {"kind": "exact", ...} with rational
// coefficient strings, certified enclosures carry {"kind": "interval", ...}
// with rational endpoint strings.  No binary floating-point numbers appear
// anywhere in the output.
#ifndef MONODROMY_SERIALIZE_HPP_
#define MONODROMY_SERIALIZE_HPP_

#include <json.hpp>

#include "monodromy/braid_rep.hpp"
#include "monodromy/fusion.hpp"
#include "monodromy/intervals.hpp"
#include "monodromy/modular_rep.hpp"
#include "monodromy/order.hpp"
#include "monodromy/quadratic.hpp"

namespace monodromy {

using Json = nlohmann::json;

Json json_rat(const Rat& r);              // "p/q" string
Json json_of(const Cyc& x);               // exact, conductor + coeffs
Json json_of(const Ext& x);               // exact, adds t_coeffs + radicand
Json json_of(const RatInterval& iv);      // interval, lo/hi
Json json_of(const ComplexBox& box);      // interval, re/im
Json json_of(const RatPoly& p);           // exact, low-to-high coefficients
Json json_of(const Mat2& m);              // 2x2 nested entries
Json json_of(const CycMat& m);            // n x n nested entries
Json json_of(const Word& w);

Json json_of(const OrderVerdict& v);
Json json_of(const SigmaTraceReport& r);
Json json_of(const ScanReport& r);
Json json_of(const LanternReport& r);
Json json_of(const ClassifyReport& r);
Json json_of(const RelationsReport& r);
Json json_of(const ModularImageReport& r);  // element matrices summarized

}  // namespace monodromy

#endif  // MONODROMY_SERIALIZE_HPP_
