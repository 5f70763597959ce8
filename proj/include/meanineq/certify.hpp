#ifndef MEANINEQ_CERTIFY_HPP
#define MEANINEQ_CERTIFY_HPP

#include "meanineq/radical.hpp"
#include "meanineq/registry.hpp"

#include <string>
#include <variant>
#include <vector>

namespace meanineq::certify {

using algebra::Poly;
using algebra::RadicalExpr;
using algebra::Rat;

// One factor of a positivity-witness product: an expression in the text
// grammar raised to a power. Manifestly nonnegative on t > 0 when the power
// is even or when every polynomial part of the base has nonnegative
// coefficients (R1 and R2 are positive square roots).
struct WitnessFactor {
    std::string expr_text;
    int power = 1;
    RadicalExpr expr; // parsed form of expr_text
};

struct WitnessProduct {
    std::vector<WitnessFactor> factors;
};

struct StepExpand {};

// Squaring argument: verify S - T equals the current expression,
// that the witness proves S >= 0, and continue with S^2 - T^2.
struct StepSplitSquare {
    std::string s_text, t_text;
    RadicalExpr s, t;
    std::vector<WitnessProduct> witness; // sum of manifestly nonneg products
};

struct StepUnitRootFactor {
    int k = 0; // must be even; (t-1)^k >= 0 is what keeps the step sound
};

struct StepDeflateZero {
    int k = 0;
};

struct StepSturmNoPositiveRoots {};
struct StepPositiveAtOne {};
struct StepNonnegCoeffs {};

using Step = std::variant<StepExpand, StepSplitSquare, StepUnitRootFactor, StepDeflateZero,
                          StepSturmNoPositiveRoots, StepPositiveAtOne, StepNonnegCoeffs>;

// Data-encoded replay of one proof part. Certificates live in JSON files;
// the checker is generic.
struct Certificate {
    std::string statement_id;
    Rat scale = Rat(1); // positive prefactor of the printed proof; never affects the verdict
    std::string note;   // transcription remarks about the printed proof
    std::vector<Step> steps;
};

struct StepTrace {
    std::string step;
    std::string detail;
};

struct CertResult {
    std::string statement_id;
    bool proved = false;
    int failed_step = -1;      // index into steps, -1 for precondition failures
    std::string reason;        // empty when proved
    std::vector<StepTrace> trace;
};

// Replays the steps with exact arithmetic. Proved only if every side
// condition held exactly and the chain ends in a terminal witness
// (NonnegCoeffs, or SturmNoPositiveRoots followed by PositiveAtOne).
CertResult check_certificate(const Certificate& cert, const registry::Statement& stmt);

// Resolves the statement in the registry first.
CertResult check_certificate(const Certificate& cert);

// Parses one JSON certificate document; errors carry line/column positions.
Certificate parse_certificate(const std::string& json_text);

// Canonical serialization; parse . serialize == identity on the structures,
// and serialize(parse(text)) == text for files produced by this writer.
std::string serialize_certificate(const Certificate& cert);

// The 43 certificates shipped with the library: Theorem 2.1 parts 1-42 and
// the mean-only sub-claim of Theorem 3.1 part 4.
const std::vector<Certificate>& builtin_certificates();

// Raw JSON documents backing builtin_certificates(), byte-identical to the
// shipped data/certificates/*.json files.
const std::vector<std::string>& builtin_certificate_json();

} // namespace meanineq::certify

#endif
