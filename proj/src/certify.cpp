#include "meanineq/certify.hpp"

#include "meanineq/errors.hpp"
#include "meanineq/expand.hpp"
#include "meanineq/parse.hpp"
#include "meanineq/sturm.hpp"

#include <json.hpp>

#include <sstream>

namespace meanineq::certify {

namespace {

bool manifestly_nonneg(const WitnessFactor& f) {
    if (f.power % 2 == 0) return true;
    for (int sig = 0; sig < 4; ++sig) {
        const Poly& p = f.expr.part(sig);
        if (p.is_zero()) continue;
        for (const auto& c : p.coeffs()) {
            if (c < 0) return false;
        }
    }
    return true;
}

RadicalExpr witness_value(const std::vector<WitnessProduct>& witness) {
    RadicalExpr sum;
    for (const auto& prod : witness) {
        RadicalExpr acc{Poly(Rat(1))};
        for (const auto& f : prod.factors) {
            for (int i = 0; i < f.power; ++i) acc = acc * f.expr;
        }
        sum += acc;
    }
    return sum;
}

struct CheckState {
    RadicalExpr current;
    bool expanded = false;
    int sturm_cleared_at = -2; // step index of a SturmNoPositiveRoots for the current polynomial
};

std::string describe(const RadicalExpr& e) {
    std::ostringstream out;
    out << "deg=" << e.part(0).degree();
    const int r = e.radical_term_count();
    if (r > 0) out << " radical_terms=" << r;
    return out.str();
}

} // namespace

CertResult check_certificate(const Certificate& cert, const registry::Statement& stmt) {
    CertResult res;
    res.statement_id = cert.statement_id;

    auto fail = [&](int step, const std::string& reason) {
        res.proved = false;
        res.failed_step = step;
        res.reason = reason;
        return res;
    };

    if (stmt.id != cert.statement_id) return fail(-1, "StatementMismatch: certificate names " + cert.statement_id);
    if (stmt.kind != registry::ClaimKind::Nonneg || stmt.level != registry::Level::Kernel || !stmt.mean_only()) {
        return fail(-1, "NotRadicalExpressible: statement is not a mean-only kernel claim");
    }
    if (cert.scale <= 0) return fail(-1, "BadScale: scale must be positive");
    if (cert.steps.empty()) return fail(-1, "EmptySteps");

    CheckState st;
    for (size_t i = 0; i < cert.steps.size(); ++i) {
        const int step_index = static_cast<int>(i);
        bool ok = true;
        std::visit(
            [&](const auto& step) {
                using T = std::decay_t<decltype(step)>;
                if constexpr (std::is_same_v<T, StepExpand>) {
                    if (st.expanded) {
                        fail(step_index, "DuplicateExpand");
                        ok = false;
                        return;
                    }
                    kernels::Combination scaled = stmt.combo;
                    for (auto& term : scaled.terms) term.first *= cert.scale;
                    algebra::Expansion ex;
                    try {
                        ex = algebra::expand_combination(scaled);
                    } catch (const Error& e) {
                        fail(step_index, std::string("ExpandFailed: ") + e.what());
                        ok = false;
                        return;
                    }
                    st.current = ex.numerator.primitive_part();
                    st.expanded = true;
                    res.trace.push_back({"expand", describe(st.current) + " denominator_deg=" +
                                                      std::to_string(ex.denominator.degree())});
                } else if constexpr (std::is_same_v<T, StepSplitSquare>) {
                    if (!st.expanded) {
                        fail(step_index, "ExpandRequired");
                        ok = false;
                        return;
                    }
                    if (!(step.s - step.t == st.current)) {
                        fail(step_index, "SplitMismatch: S - T differs from the current expression");
                        ok = false;
                        return;
                    }
                    if (!(witness_value(step.witness) == step.s)) {
                        fail(step_index, "WitnessRejected: witness sum does not equal S");
                        ok = false;
                        return;
                    }
                    for (const auto& prod : step.witness) {
                        for (const auto& f : prod.factors) {
                            if (!manifestly_nonneg(f)) {
                                fail(step_index, "WitnessRejected: factor \"" + f.expr_text +
                                                     "\" is not manifestly nonnegative");
                                ok = false;
                                return;
                            }
                        }
                    }
                    RadicalExpr squared;
                    try {
                        squared = algebra::square_compare(step.s, step.t);
                    } catch (const algebra::NoProgressError& e) {
                        fail(step_index, std::string("NoProgress: ") + e.what());
                        ok = false;
                        return;
                    }
                    st.current = squared.primitive_part();
                    st.sturm_cleared_at = -2;
                    res.trace.push_back({"split_square", describe(st.current)});
                } else if constexpr (std::is_same_v<T, StepUnitRootFactor>) {
                    if (!st.expanded || !st.current.is_polynomial()) {
                        fail(step_index, "PolynomialRequired");
                        ok = false;
                        return;
                    }
                    if (step.k < 1 || step.k % 2 != 0) {
                        fail(step_index, "UnsoundExponent: (t-1)^k factoring needs even k >= 2");
                        ok = false;
                        return;
                    }
                    try {
                        Poly q = algebra::factor_unit_root(st.current.part(0), step.k);
                        st.current = RadicalExpr{q.primitive_part()};
                    } catch (const algebra::NotDivisibleError& e) {
                        fail(step_index, std::string("NotDivisible: ") + e.what());
                        ok = false;
                        return;
                    }
                    st.sturm_cleared_at = -2;
                    res.trace.push_back({"unit_root_factor", "k=" + std::to_string(step.k) + " " +
                                                                 describe(st.current)});
                } else if constexpr (std::is_same_v<T, StepDeflateZero>) {
                    if (!st.expanded || !st.current.is_polynomial()) {
                        fail(step_index, "PolynomialRequired");
                        ok = false;
                        return;
                    }
                    if (step.k < 1) {
                        fail(step_index, "UnsoundExponent: t^k deflation needs k >= 1");
                        ok = false;
                        return;
                    }
                    try {
                        Poly q = algebra::deflate_zero(st.current.part(0), step.k);
                        st.current = RadicalExpr{q.primitive_part()};
                    } catch (const algebra::NotDivisibleError& e) {
                        fail(step_index, std::string("NotDivisible: ") + e.what());
                        ok = false;
                        return;
                    }
                    st.sturm_cleared_at = -2;
                    res.trace.push_back({"deflate_zero", "k=" + std::to_string(step.k) + " " + describe(st.current)});
                } else if constexpr (std::is_same_v<T, StepSturmNoPositiveRoots>) {
                    if (!st.expanded || !st.current.is_polynomial()) {
                        fail(step_index, "PolynomialRequired");
                        ok = false;
                        return;
                    }
                    const Poly& p = st.current.part(0);
                    if (p.is_zero()) {
                        fail(step_index, "ZeroPolynomial");
                        ok = false;
                        return;
                    }
                    if (p.eval(Rat(0)) == 0) {
                        fail(step_index, "EndpointRoot: deflate t^k first");
                        ok = false;
                        return;
                    }
                    const auto report = algebra::sturm_count(p, algebra::Interval::positive_axis());
                    if (report.root_count != 0) {
                        fail(step_index, "RootsFound{" + std::to_string(report.root_count) + "}");
                        ok = false;
                        return;
                    }
                    st.sturm_cleared_at = step_index;
                    res.trace.push_back({"sturm_no_positive_roots", "roots_in_(0,inf)=0 deg=" +
                                                                        std::to_string(p.degree())});
                } else if constexpr (std::is_same_v<T, StepPositiveAtOne>) {
                    if (!st.expanded || !st.current.is_polynomial()) {
                        fail(step_index, "PolynomialRequired");
                        ok = false;
                        return;
                    }
                    const Rat v = st.current.part(0).eval(Rat(1));
                    if (v <= 0) {
                        fail(step_index, "NonPositiveAtOne: value_at_one=" + algebra::rat_to_string(v));
                        ok = false;
                        return;
                    }
                    res.trace.push_back({"positive_at_one", "value_at_one=" + algebra::rat_to_string(v)});
                } else if constexpr (std::is_same_v<T, StepNonnegCoeffs>) {
                    if (!st.expanded || !st.current.is_polynomial()) {
                        fail(step_index, "PolynomialRequired");
                        ok = false;
                        return;
                    }
                    const Poly& p = st.current.part(0);
                    if (!algebra::nonneg_coeffs(p)) {
                        int bad = -1;
                        for (int d = 0; d <= p.degree(); ++d) {
                            if (p.coeff(d) < 0) {
                                bad = d;
                                break;
                            }
                        }
                        fail(step_index, p.is_zero() ? "ZeroPolynomial"
                                                     : "NegativeCoefficient at degree " + std::to_string(bad) +
                                                           " (" + algebra::rat_to_string(p.coeff(bad)) + ")");
                        ok = false;
                        return;
                    }
                    res.trace.push_back({"nonneg_coeffs", "deg=" + std::to_string(p.degree())});
                }
            },
            cert.steps[i]);
        if (!ok) return res;
    }

    // The chain must end in a terminal positivity witness.
    const Step& last = cert.steps.back();
    const int last_index = static_cast<int>(cert.steps.size()) - 1;
    if (std::holds_alternative<StepNonnegCoeffs>(last)) {
        res.proved = true;
    } else if (std::holds_alternative<StepPositiveAtOne>(last) && st.sturm_cleared_at == last_index - 1) {
        // No positive roots and positive at t=1: positive on all of (0, inf).
        res.proved = true;
    } else {
        return fail(last_index, "NoTerminalWitness: expected NonnegCoeffs or SturmNoPositiveRoots+PositiveAtOne");
    }
    res.failed_step = -1;
    res.reason.clear();
    return res;
}

CertResult check_certificate(const Certificate& cert) {
    const registry::Statement* stmt = registry::find(cert.statement_id);
    if (!stmt) {
        CertResult res;
        res.statement_id = cert.statement_id;
        res.failed_step = -1;
        res.reason = "UnknownStatement: " + cert.statement_id;
        return res;
    }
    return check_certificate(cert, *stmt);
}

namespace {

std::pair<int, int> line_col(const std::string& text, size_t byte) {
    int line = 1, col = 1;
    for (size_t i = 0; i < byte && i < text.size(); ++i) {
        if (text[i] == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
    }
    return {line, col};
}

} // namespace

Certificate parse_certificate(const std::string& json_text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(json_text);
    } catch (const nlohmann::json::parse_error& e) {
        auto [line, col] = line_col(json_text, e.byte > 0 ? e.byte - 1 : 0);
        throw ParseError("certificate JSON error at line " + std::to_string(line) + ", column " +
                         std::to_string(col) + ": " + e.what());
    }
    try {
        Certificate cert;
        cert.statement_id = doc.at("statement_id").get<std::string>();
        cert.scale = algebra::rat_from_string(doc.at("scale").get<std::string>());
        if (doc.contains("note")) cert.note = doc.at("note").get<std::string>();
        for (const auto& js : doc.at("steps")) {
            const std::string op = js.at("op").get<std::string>();
            if (op == "expand") {
                cert.steps.emplace_back(StepExpand{});
            } else if (op == "split_square") {
                StepSplitSquare step;
                step.s_text = js.at("s").get<std::string>();
                step.t_text = js.at("t").get<std::string>();
                step.s = algebra::parse_radical(step.s_text);
                step.t = algebra::parse_radical(step.t_text);
                for (const auto& jp : js.at("witness")) {
                    WitnessProduct prod;
                    for (const auto& jf : jp.at("factors")) {
                        WitnessFactor f;
                        f.expr_text = jf.at("expr").get<std::string>();
                        f.power = jf.contains("pow") ? jf.at("pow").get<int>() : 1;
                        f.expr = algebra::parse_radical(f.expr_text);
                        prod.factors.push_back(std::move(f));
                    }
                    step.witness.push_back(std::move(prod));
                }
                cert.steps.emplace_back(std::move(step));
            } else if (op == "unit_root_factor") {
                cert.steps.emplace_back(StepUnitRootFactor{js.at("k").get<int>()});
            } else if (op == "deflate_zero") {
                cert.steps.emplace_back(StepDeflateZero{js.at("k").get<int>()});
            } else if (op == "sturm_no_positive_roots") {
                cert.steps.emplace_back(StepSturmNoPositiveRoots{});
            } else if (op == "positive_at_one") {
                cert.steps.emplace_back(StepPositiveAtOne{});
            } else if (op == "nonneg_coeffs") {
                cert.steps.emplace_back(StepNonnegCoeffs{});
            } else {
                throw ParseError("unknown certificate step op \"" + op + "\"");
            }
        }
        return cert;
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("certificate JSON shape error: ") + e.what());
    }
}

std::string serialize_certificate(const Certificate& cert) {
    nlohmann::ordered_json doc;
    doc["statement_id"] = cert.statement_id;
    doc["scale"] = algebra::rat_to_string(cert.scale);
    if (!cert.note.empty()) doc["note"] = cert.note;
    auto steps = nlohmann::ordered_json::array();
    for (const auto& step : cert.steps) {
        std::visit(
            [&](const auto& s) {
                using T = std::decay_t<decltype(s)>;
                nlohmann::ordered_json js;
                if constexpr (std::is_same_v<T, StepExpand>) {
                    js["op"] = "expand";
                } else if constexpr (std::is_same_v<T, StepSplitSquare>) {
                    js["op"] = "split_square";
                    js["s"] = s.s_text;
                    js["t"] = s.t_text;
                    auto witness = nlohmann::ordered_json::array();
                    for (const auto& prod : s.witness) {
                        auto factors = nlohmann::ordered_json::array();
                        for (const auto& f : prod.factors) {
                            nlohmann::ordered_json jf;
                            jf["expr"] = f.expr_text;
                            if (f.power != 1) jf["pow"] = f.power;
                            factors.push_back(std::move(jf));
                        }
                        witness.push_back({{"factors", std::move(factors)}});
                    }
                    js["witness"] = std::move(witness);
                } else if constexpr (std::is_same_v<T, StepUnitRootFactor>) {
                    js["op"] = "unit_root_factor";
                    js["k"] = s.k;
                } else if constexpr (std::is_same_v<T, StepDeflateZero>) {
                    js["op"] = "deflate_zero";
                    js["k"] = s.k;
                } else if constexpr (std::is_same_v<T, StepSturmNoPositiveRoots>) {
                    js["op"] = "sturm_no_positive_roots";
                } else if constexpr (std::is_same_v<T, StepPositiveAtOne>) {
                    js["op"] = "positive_at_one";
                } else {
                    js["op"] = "nonneg_coeffs";
                }
                steps.push_back(std::move(js));
            },
            step);
    }
    doc["steps"] = std::move(steps);
    return doc.dump(2) + "\n";
}

const std::vector<Certificate>& builtin_certificates() {
    static const std::vector<Certificate> certs = [] {
        std::vector<Certificate> out;
        for (const auto& text : builtin_certificate_json()) out.push_back(parse_certificate(text));
        return out;
    }();
    return certs;
}

} // namespace meanineq::certify
