#include "tetra/suites.hpp"

#include "tetra/presentation.hpp"
#include "tetra/sampling.hpp"
#include "tetra/span_lab.hpp"

#include <stdexcept>

namespace tetra {

namespace {

// Symmetric-basis elements 1, t^i, (t')^i, (t'')^i up to the given degree.
std::vector<AElem> sym_basis_elements(unsigned max_degree) {
    std::vector<AElem> out;
    out.push_back(AElem(1));
    for (TVar v : {TVar::T, TVar::TPrime, TVar::TSecond}) {
        const AElem base = AElem::var(v);
        AElem p = base;
        for (unsigned i = 1; i <= max_degree; ++i) {
            out.push_back(p);
            p = p * base;
        }
    }
    return out;
}

VerificationReport cocycle_suite(const SuiteOptions& opt) {
    VerificationReport report;
    report.suite = "cocycle";

    const auto elements = sym_basis_elements(opt.max_degree);
    {
        bool ok = true;
        std::string witness;
        for (const AElem& a : elements) {
            for (const AElem& b : elements) {
                if (!(cocycle(a, b) + cocycle(b, a)).is_zero()) {
                    ok = false;
                    if (witness.empty())
                        witness = "<" + a.str() + ", " + b.str() + ">";
                }
            }
        }
        const size_t n = elements.size() * elements.size();
        report.add("skew-symmetry on " + std::to_string(n) + " symmetric-basis pairs (degree <= " +
                       std::to_string(opt.max_degree) + ")",
                   ok, "", "", witness);
    }
    {
        Rng rng(opt.seed);
        bool skew_ok = true, cyclic_ok = true;
        std::string skew_witness, cyclic_witness;
        for (unsigned s = 0; s < opt.samples; ++s) {
            const AElem a = random_aelem(rng, 5);
            const AElem b = random_aelem(rng, 5);
            const AElem c = random_aelem(rng, 5);
            if (!(cocycle(a, b) + cocycle(b, a)).is_zero()) {
                skew_ok = false;
                if (skew_witness.empty())
                    skew_witness = "sample " + std::to_string(s);
            }
            const CentralVec cyc = cocycle(a * b, c) + cocycle(b * c, a) + cocycle(c * a, b);
            if (!cyc.is_zero()) {
                cyclic_ok = false;
                if (cyclic_witness.empty())
                    cyclic_witness = "sample " + std::to_string(s) + ": " + cyc.str();
            }
        }
        report.add("skew-symmetry on " + std::to_string(opt.samples) + " random pairs (degree <= 5)",
                   skew_ok, "", "", skew_witness);
        report.add("cyclic identity <ab,c>+<bc,a>+<ca,b> = 0 on " + std::to_string(opt.samples) +
                       " random triples (degree <= 5)",
                   cyclic_ok, "", "", cyclic_witness);
    }
    // <f^m, f^n> = m delta_{m+n,0} <f, f^-1>, negative powers included
    for (TVar v : {TVar::T, TVar::TPrime, TVar::TSecond}) {
        const AElem f = AElem::var(v);
        const CentralVec unit = cocycle(f, f.pow(-1));
        bool ok = true;
        std::string witness;
        for (int m = -8; m <= 8; ++m) {
            for (int n = -8; n <= 8; ++n) {
                const CentralVec got = cocycle(f.pow(m), f.pow(n));
                const CentralVec want =
                    (m + n == 0) ? Scalar(m) * unit : CentralVec::zero();
                if (got != want) {
                    ok = false;
                    if (witness.empty())
                        witness = "m=" + std::to_string(m) + ", n=" + std::to_string(n);
                }
            }
        }
        report.add("same-variable formula for f = " + tvar_str(v) + ", |m|,|n| <= 8", ok, "", "",
                   witness);
    }
    // <f^m, g^n> = m (-1)^m binom(n,m) <f, f^-1> for g = f'
    for (TVar v : {TVar::T, TVar::TPrime, TVar::TSecond}) {
        const AElem f = AElem::var(v);
        const AElem g = f.prime();
        const CentralVec unit = cocycle(f, f.pow(-1));
        bool ok = true;
        std::string witness;
        for (int m = 0; m <= 8; ++m) {
            for (int n = 0; n <= 8; ++n) {
                const CentralVec got = cocycle(f.pow(m), g.pow(n));
                const Scalar sign = (m % 2 == 0) ? Scalar(1) : Scalar(-1);
                const CentralVec want =
                    (Scalar(m) * sign * binomial(static_cast<unsigned>(n), static_cast<unsigned>(m))) * unit;
                if (got != want) {
                    ok = false;
                    if (witness.empty())
                        witness = "m=" + std::to_string(m) + ", n=" + std::to_string(n);
                }
            }
        }
        report.add("neighbor formula for f = " + tvar_str(v) + ", 0 <= m,n <= 8", ok, "", "",
                   witness);
    }
    {
        CentralVec total = CentralVec::zero();
        for (TVar v : {TVar::T, TVar::TPrime, TVar::TSecond}) {
            const AElem f = AElem::var(v);
            total = total + cocycle(f, f.pow(-1));
        }
        report.add("<t,t^-1> + <t',(t')^-1> + <t'',(t'')^-1> = 0", total.is_zero(), total.str(),
                   "0", total.str());
    }
    return report;
}

VerificationReport jacobi_suite(const SuiteOptions& opt) {
    VerificationReport report;
    report.suite = "jacobi";
    Rng rng(opt.seed);
    bool jacobi_ok = true, anti_ok = true;
    std::string jacobi_witness, anti_witness;
    for (unsigned s = 0; s < opt.samples; ++s) {
        const LHatElem u = random_lhat(rng, 4);
        const LHatElem v = random_lhat(rng, 4);
        const LHatElem w = random_lhat(rng, 4);
        const LHatElem jac = lhat_bracket(u, lhat_bracket(v, w)) +
                             lhat_bracket(v, lhat_bracket(w, u)) +
                             lhat_bracket(w, lhat_bracket(u, v));
        if (!jac.is_zero()) {
            jacobi_ok = false;
            if (jacobi_witness.empty())
                jacobi_witness = "sample " + std::to_string(s);
        }
        if (!(lhat_bracket(u, v) + lhat_bracket(v, u)).is_zero()) {
            anti_ok = false;
            if (anti_witness.empty())
                anti_witness = "sample " + std::to_string(s);
        }
    }
    report.add("jacobi identity on " + std::to_string(opt.samples) +
                   " random triples (degree <= 4)",
               jacobi_ok, "", "0", jacobi_witness);
    report.add("antisymmetry on " + std::to_string(opt.samples) + " random pairs",
               anti_ok, "", "0", anti_witness);
    return report;
}

VerificationReport center_suite(unsigned max_cap) {
    VerificationReport report;
    report.suite = "center";
    for (unsigned d = 1; d <= max_cap; ++d) {
        const SpanBasis basis = center_at_cap(DegreeCap{d});
        const bool has_units = basis.contains(LHatElem::from_central(CentralVec::c_unit())) &&
                               basis.contains(LHatElem::from_central(CentralVec::cp_unit()));
        report.add("center at cap " + std::to_string(d) + " equals span{c, c'}",
                   basis.dimension() == 2 && has_units,
                   "dimension " + std::to_string(basis.dimension()), "dimension 2", "");
    }
    return report;
}

}  // namespace

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = {
        "relations-def11", "relations-def34", "relations-lemma36", "relations-thm61",
        "cocycle", "jacobi", "diagram", "center", "onsager", "all"};
    return names;
}

ReportDocument run_suite(const std::string& name, const SuiteOptions& options) {
    ReportDocument doc;
    doc.suite = name;
    doc.parameters["seed"] = static_cast<std::int64_t>(options.seed);
    doc.parameters["samples"] = options.samples;
    doc.parameters["max_degree"] = options.max_degree;

    const auto with_cap = [&](unsigned fallback) {
        const unsigned c = options.cap.value_or(fallback);
        doc.parameters["cap"] = c;
        return c;
    };

    if (name == "relations-def11") {
        doc.append(verify_presentation(PresentationId::Def11));
    } else if (name == "relations-def34") {
        doc.append(verify_presentation(PresentationId::Def34));
    } else if (name == "relations-lemma36") {
        doc.append(verify_presentation(PresentationId::Lemma36));
    } else if (name == "relations-thm61") {
        doc.append(verify_a4_presentation().report);
    } else if (name == "cocycle") {
        doc.append(cocycle_suite(options));
    } else if (name == "jacobi") {
        doc.append(jacobi_suite(options));
    } else if (name == "diagram") {
        doc.append(verify_diagram());
    } else if (name == "center") {
        doc.append(center_suite(with_cap(4)));
    } else if (name == "onsager") {
        const unsigned cap = with_cap(3);
        for (unsigned d = 2; d <= std::max(cap, 2u); ++d)
            doc.append(onsager_report(DegreeCap{d}));
    } else if (name == "all") {
        doc.append(verify_presentation(PresentationId::Def11));
        doc.append(verify_presentation(PresentationId::Def34));
        doc.append(verify_presentation(PresentationId::Lemma36));
        doc.append(verify_a4_presentation().report);
        doc.append(cocycle_suite(options));
        doc.append(jacobi_suite(options));
        doc.append(verify_diagram());
        doc.append(center_injectivity_report());
        doc.append(center_suite(options.cap.value_or(4)));
        for (unsigned d = 2; d <= std::max(options.cap.value_or(3), 2u); ++d)
            doc.append(onsager_report(DegreeCap{d}));
        doc.parameters["cap"] = options.cap.value_or(4);
    } else {
        throw std::invalid_argument("unknown suite '" + name + "'");
    }
    return doc;
}

}  // namespace tetra
