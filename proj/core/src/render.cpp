#include <torisol/render.hpp>

#include <torisol/errors.hpp>

#include <algorithm>
#include <array>
#include <sstream>

namespace torisol {

namespace {

const char* kVarNames[kSurfaceVars] = {"X", "Y", "Z", "W"};

void append_power(std::ostringstream& os, const char* var, const Int& e, RenderStyle style,
                  bool& first) {
    if (e == 0) return;
    if (!first && style == RenderStyle::Text) os << " ";
    first = false;
    os << var;
    if (e != 1) {
        if (style == RenderStyle::Text)
            os << "^" << e;
        else
            os << "^{" << e << "}";
    }
}

std::string trace_line(const Int& lhs, const Int& h, const Int& rhs, const Int& rem,
                       RenderStyle style) {
    std::ostringstream os;
    const char* times = style == RenderStyle::Text ? " * " : " \\cdot ";
    const char* eq = style == RenderStyle::Text ? " = " : " & = & ";
    os << lhs << eq << h << times << rhs;
    if (rem != 0) os << " + " << rem;
    return os.str();
}

}  // namespace

std::string monomial_string(const IntVector& exponents, RenderStyle style) {
    if (exponents.size() != kSurfaceVars) throw invalid_params("monomials use four variables");
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < kSurfaceVars; ++i)
        append_power(os, kVarNames[i], exponents[i], style, first);
    if (first) return "1";
    return os.str();
}

std::string binomial_string(const Binomial& b, RenderStyle style) {
    std::string sep = style == RenderStyle::Text ? " - " : "-";
    return monomial_string(b.plus, style) + sep + monomial_string(b.minus, style);
}

std::string render_trace(const EuclidTrace& t, RenderStyle style) {
    std::ostringstream os;
    if (style == RenderStyle::Latex) os << "\\[\\begin{array}{rcl}\n";
    os << trace_line(t.m, t.h_at(0), t.n, t.r_at(1), style);
    os << (style == RenderStyle::Latex ? "\\\\\n" : "\n");
    for (int k = 1; k <= t.q(); ++k) {
        os << trace_line(t.r_at(k - 1), t.h_at(k), t.r_at(k), t.r_at(k + 1), style);
        os << (style == RenderStyle::Latex && k < t.q() ? "\\\\\n" : "\n");
    }
    if (style == RenderStyle::Latex) os << "\\end{array}\\]\n";
    return os.str();
}

namespace {

std::string render_table_text(const GeneratorTable& table) {
    std::ostringstream os;
    os << "S = <(1,0), (" << table.params.lambda << ",1), (0," << table.params.n << "), (0,"
       << table.params.m << ")>\n";
    os << "h = (";
    for (int k = 0; k <= table.trace.q(); ++k) os << (k ? ", " : "") << table.trace.h_at(k);
    os << "), r = (";
    for (int k = 0; k <= table.trace.q(); ++k) os << (k ? ", " : "") << table.trace.r_at(k);
    os << ")\n";
    os << table.entries.size() << " generators\n";
    std::vector<std::array<std::string, 7>> rows;
    rows.push_back({"kind", "k", "j", "a", "b", "d", "binomial"});
    for (const GeneratorEntry& e : table.entries)
        rows.push_back({kind_name(e.kind), std::to_string(e.k), std::to_string(e.j),
                        to_string(e.a), to_string(e.b), to_string(e.d),
                        binomial_string(e.binomial, RenderStyle::Text)});
    std::array<std::size_t, 6> width{};
    for (const auto& r : rows)
        for (std::size_t c = 0; c < 6; ++c) width[c] = std::max(width[c], r[c].size());
    for (const auto& r : rows) {
        os << "  ";
        for (std::size_t c = 0; c < 6; ++c)
            os << r[c] << std::string(width[c] - r[c].size() + 2, ' ');
        os << r[6] << "\n";
    }
    return os.str();
}

std::string render_table_latex(const GeneratorTable& table) {
    const EuclidTrace& t = table.trace;
    BoundarySequences bnd(t);
    std::ostringstream os;
    os << "\\[\\begin{array}{l|l}\n";
    os << "\\multicolumn{2}{l}{"
       << binomial_string(table.entries[0].binomial, RenderStyle::Latex) << ",\\quad "
       << binomial_string(table.entries[1].binomial, RenderStyle::Latex) << "}\\\\ \\hline\n";
    for (int k = 1; k <= t.q(); ++k) {
        os << "\\begin{array}{l}\n";
        os << "a_{" << k << ",j}=" << t.r_at(k - 1) << "-" << t.r_at(k) << "j\\\\\n";
        os << "b_{" << k << ",j}=" << bnd.b_at(k - 1) << "j";
        if (bnd.b_at(k - 2) != 0) os << "+" << bnd.b_at(k - 2);
        os << "\\\\\n";
        os << "d_{" << k << ",j}=" << bnd.d_at(k - 1) << "j+" << bnd.d_at(k - 2) << "\\\\\n";
        os << "j=1,\\ldots," << t.h_at(k) << "\n";
        os << "\\end{array} & \\begin{array}{l}\n";
        for (const GeneratorEntry& e : table.entries)
            if (e.k == k) os << binomial_string(e.binomial, RenderStyle::Latex) << "\\\\\n";
        os << "\\end{array}\\\\";
        os << (k < t.q() ? " \\hline" : "") << "\n";
    }
    os << "\\end{array}\\]\n";
    return os.str();
}

}  // namespace

std::string render_table(const GeneratorTable& table, RenderStyle style) {
    return style == RenderStyle::Text ? render_table_text(table) : render_table_latex(table);
}

std::string render_classification(const ClassificationResult& r) {
    std::ostringstream os;
    os << "verdict: " << verdict_name(r.verdict) << "\n";
    if (r.two_s) {
        os << "  lambdas = (";
        for (std::size_t i = 0; i < r.two_s->lambdas.size(); ++i)
            os << (i ? ", " : "") << r.two_s->lambdas[i];
        os << "), n = " << r.two_s->n << ", m = " << r.two_s->m << "\n";
    }
    if (r.case1) {
        os << "  lambda = " << r.case1->lambda << ", powers = (";
        for (std::size_t i = 0; i < r.case1->powers.size(); ++i)
            os << (i ? ", " : "") << r.case1->powers[i];
        os << ")";
        if (!r.case1->free_monomials.empty()) {
            os << ", free = ";
            for (std::size_t i = 0; i < r.case1->free_monomials.size(); ++i)
                os << (i ? ", " : "") << "(" << r.case1->free_monomials[i].first << ","
                   << r.case1->free_monomials[i].second << ")";
        }
        os << "\n";
    }
    if (r.case2) {
        os << "  lambda = " << r.case2->lambda << ", b1 = " << r.case2->b1 << ", x powers = (";
        for (std::size_t i = 0; i < r.case2->x_powers.size(); ++i)
            os << (i ? ", " : "") << r.case2->x_powers[i];
        os << "), y powers = (";
        for (std::size_t i = 0; i < r.case2->y_powers.size(); ++i)
            os << (i ? ", " : "") << r.case2->y_powers[i];
        os << ")\n";
    }
    if (r.sq) {
        os << "  corank-q pattern: s = " << r.sq->params.s << ", q = " << r.sq->params.q
           << ", witness indices = {";
        for (std::size_t i = 0; i < r.sq->generator_indices.size(); ++i)
            os << (i ? ", " : "") << r.sq->generator_indices[i];
        os << "}\n";
    }
    os << "evidence:\n";
    for (const EvidenceItem& e : r.evidence) {
        os << "  [" << (e.passed ? "pass" : "fail") << "] " << e.check;
        if (!e.detail.empty()) os << ": " << e.detail;
        os << "\n";
    }
    return os.str();
}

}  // namespace torisol
