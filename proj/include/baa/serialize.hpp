#pragma once

#include <optional>
#include <string>

#include <json.hpp>

#include "baa/complex.hpp"
#include "baa/connectivity.hpp"
#include "baa/homology.hpp"
#include "baa/rinterval.hpp"
#include "baa/sampler.hpp"
#include "baa/steinberg.hpp"

namespace baa {

using Json = nlohmann::ordered_json;

// Integers that fit in 64 bits become JSON numbers, larger ones strings.
Json integer_json(const Integer& x);

Json complex_json(const Complex& c);
// Compact JSON text with a trailing newline; simplices sorted within each
// dimension.
std::string complex_to_string(const Complex& c);

// Parses the interchange format. Tags are checked against classify and the
// simplex set must be downward closed.
Complex complex_from_json(const Json& j);
Complex complex_from_string(const std::string& text);

Json homology_json(const HomologyGroup& h);

// Connectivity certificate of a Q complex. `requested` is the tuple given by
// the user when it differs from its canonical form.
Json certificate_json(const IntervalTuple& t, const ConnectivityVerdict& v,
                      const std::optional<IntervalTuple>& requested = std::nullopt);

Json steinberg_report_json(const SteinbergReport& r);
Json carrying_report_json(const CarryingTestReport& r, std::size_t samples, std::uint64_t seed);

// Pretty text with a trailing newline.
std::string dump(const Json& j);

}  // namespace baa
