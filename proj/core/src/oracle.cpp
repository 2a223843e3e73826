#include <torisol/oracle.hpp>

#include <torisol/errors.hpp>

#include <algorithm>
#include <cassert>
#include <deque>
#include <set>

namespace torisol {

bool BoundedKernelSet::contains(const IntVector& canonical) const {
    return std::binary_search(vectors.begin(), vectors.end(), canonical);
}

namespace {

// Coefficient box guaranteeing that every lattice vector with sup-norm at
// most `bound` is hit: bound the inverse of the best r x r minor of the
// basis matrix.
std::vector<Int> coefficient_box(const std::vector<IntVector>& basis, const Int& bound) {
    std::size_t r = basis.size();
    std::size_t p = basis[0].size();
    std::vector<std::size_t> best_rows;
    Int best_det = 0;
    std::vector<std::size_t> rows(r);
    // all row subsets of size r (r <= 2, p small)
    std::vector<std::size_t> idx(r);
    for (std::size_t i = 0; i < r; ++i) idx[i] = i;
    for (;;) {
        IntMatrix m(r, r);
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < r; ++j) m.at(i, j) = basis[j][idx[i]];
        Int det = abs(determinant(m));
        if (det > best_det) {
            best_det = det;
            best_rows = idx;
        }
        std::size_t i = r;
        while (i > 0) {
            --i;
            if (idx[i] != i + p - r) break;
        }
        if (idx[i] == i + p - r) break;
        ++idx[i];
        for (std::size_t j = i + 1; j < r; ++j) idx[j] = idx[j - 1] + 1;
    }
    if (best_det == 0) throw error("internal: kernel basis has no invertible minor");
    std::vector<Int> box(r);
    if (r == 1) {
        box[0] = bound / best_det + 1;
    } else {
        IntMatrix m(2, 2);
        for (std::size_t i = 0; i < 2; ++i)
            for (std::size_t j = 0; j < 2; ++j) m.at(i, j) = basis[j][best_rows[i]];
        // rows of the adjugate of [[a,b],[c,d]] are [d,-b] and [-c,a]
        Int row0 = abs(m.at(1, 1)) + abs(m.at(0, 1));
        Int row1 = abs(m.at(1, 0)) + abs(m.at(0, 0));
        box[0] = row0 * bound / best_det + 1;
        box[1] = row1 * bound / best_det + 1;
    }
    return box;
}

}  // namespace

BoundedKernelSet enumerate_kernel(const SemigroupSpec& spec, const Int& bound) {
    spec.validate();
    if (bound < 1) throw invalid_params("bound must be at least 1");
    std::vector<IntVector> basis = kernel_basis(spec);
    if (basis.size() > 2)
        throw rank_too_high("exhaustive enumeration supports kernel rank at most 2");
    BoundedKernelSet set;
    set.bound = bound;
    if (basis.empty()) return set;
    std::vector<Int> box = coefficient_box(basis, bound);
    std::set<IntVector> seen;
    IntVector alpha(basis[0].size());
    if (basis.size() == 1) {
        for (Int c = -box[0]; c <= box[0]; ++c) {
            if (c == 0) continue;
            alpha = vec_scaled(c, basis[0]);
            if (vec_inf_norm(alpha) <= bound) seen.insert(canonical_sign(alpha));
        }
    } else {
        for (Int c0 = -box[0]; c0 <= box[0]; ++c0) {
            IntVector base = vec_scaled(c0, basis[0]);
            for (Int c1 = -box[1]; c1 <= box[1]; ++c1) {
                if (c0 == 0 && c1 == 0) continue;
                alpha = base;
                vec_add_scaled(alpha, c1, basis[1]);
                if (vec_inf_norm(alpha) <= bound) seen.insert(canonical_sign(alpha));
            }
        }
    }
    set.vectors.assign(seen.begin(), seen.end());
    return set;
}

BoundedKernelSet enumerate_kernel(const SurfaceParams& params, const Int& bound) {
    SemigroupSpec spec;
    spec.s = 2;
    spec.generators = surface_generators(params);
    return enumerate_kernel(spec, bound);
}

int grlex_compare(const IntVector& a, const IntVector& b) {
    Int da = vec_total(a), db = vec_total(b);
    if (da != db) return da < db ? -1 : 1;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
    return 0;
}

namespace {

bool divides(const IntVector& lead, const IntVector& mono) {
    for (std::size_t i = 0; i < lead.size(); ++i)
        if (lead[i] > mono[i]) return false;
    return true;
}

IntVector rewrite_once(const IntVector& mono, const Rule& r) {
    IntVector out = mono;
    for (std::size_t i = 0; i < mono.size(); ++i) out[i] += r.trail[i] - r.lead[i];
    return out;
}

struct PendingBinomial {
    IntVector u, v;
};

std::optional<Rule> orient(const IntVector& u, const IntVector& v) {
    int c = grlex_compare(u, v);
    if (c == 0) return std::nullopt;
    if (c > 0) return Rule{u, v};
    return Rule{v, u};
}

}  // namespace

IntVector normal_form(const IntVector& monomial, const RewriteSystem& sys,
                      const std::vector<std::size_t>* rule_order) {
    IntVector mono = monomial;
    for (;;) {
        bool applied = false;
        if (rule_order) {
            for (std::size_t idx : *rule_order) {
                if (divides(sys.rules[idx].lead, mono)) {
                    mono = rewrite_once(mono, sys.rules[idx]);
                    applied = true;
                    break;
                }
            }
        } else {
            for (const Rule& r : sys.rules) {
                if (divides(r.lead, mono)) {
                    mono = rewrite_once(mono, r);
                    applied = true;
                    break;
                }
            }
        }
        if (!applied) return mono;
    }
}

RewriteSystem complete(const std::vector<Binomial>& input, const Int& degree_cap) {
    if (degree_cap < 0) throw invalid_params("degree cap must be nonnegative");
    RewriteSystem sys;
    sys.degree_cap = degree_cap;
    std::deque<PendingBinomial> work;
    for (const Binomial& b : input) {
        work.push_back({b.plus, b.minus});
        if (vec_total(b.plus) > degree_cap || vec_total(b.minus) > degree_cap) sys.capped = true;
    }
    while (!work.empty()) {
        PendingBinomial pb = work.front();
        work.pop_front();
        IntVector u = normal_form(pb.u, sys);
        IntVector v = normal_form(pb.v, sys);
        auto rule = orient(u, v);
        if (!rule) continue;
        for (const Rule& r : sys.rules) {
            // product criterion: disjoint leads give a trivially confluent pair
            IntVector lcm(r.lead.size());
            bool disjoint = true;
            for (std::size_t i = 0; i < lcm.size(); ++i) {
                lcm[i] = std::max(r.lead[i], rule->lead[i]);
                if (r.lead[i] > 0 && rule->lead[i] > 0) disjoint = false;
            }
            if (disjoint) continue;
            if (vec_total(lcm) > degree_cap) {
                sys.capped = true;
                continue;
            }
            PendingBinomial spair;
            spair.u = r.trail;
            spair.v = rule->trail;
            for (std::size_t i = 0; i < lcm.size(); ++i) {
                spair.u[i] += lcm[i] - r.lead[i];
                spair.v[i] += lcm[i] - rule->lead[i];
            }
            work.push_back(std::move(spair));
        }
        sys.rules.push_back(std::move(*rule));
    }
    // minimalize: drop rules whose lead another kept lead divides
    std::vector<Rule> kept;
    for (std::size_t i = 0; i < sys.rules.size(); ++i) {
        bool dominated = false;
        for (std::size_t j = 0; j < sys.rules.size() && !dominated; ++j) {
            if (i == j) continue;
            if (sys.rules[j].lead == sys.rules[i].lead) {
                dominated = j < i;  // keep the first of equal leads
            } else if (divides(sys.rules[j].lead, sys.rules[i].lead)) {
                dominated = true;
            }
        }
        if (!dominated) kept.push_back(sys.rules[i]);
    }
    sys.rules = std::move(kept);
    // reduce trails against the final rule set
    RewriteSystem frozen = sys;
    for (Rule& r : sys.rules) r.trail = normal_form(r.trail, frozen);
    std::sort(sys.rules.begin(), sys.rules.end(), [](const Rule& a, const Rule& b) {
        int c = grlex_compare(a.lead, b.lead);
        if (c != 0) return c < 0;
        return grlex_compare(a.trail, b.trail) < 0;
    });
    sys.rules.erase(std::unique(sys.rules.begin(), sys.rules.end()), sys.rules.end());
    return sys;
}

bool reduces_to_zero(const Binomial& b, const RewriteSystem& sys) {
    return normal_form(b.plus, sys) == normal_form(b.minus, sys);
}

MinimalityReport minimality_probe(const std::vector<Binomial>& entries, const Int& degree_cap) {
    MinimalityReport rep;
    for (std::size_t i = 0; i < entries.size(); ++i) {
        std::vector<Binomial> others;
        others.reserve(entries.size() - 1);
        for (std::size_t j = 0; j < entries.size(); ++j)
            if (j != i) others.push_back(entries[j]);
        RewriteSystem sys = complete(others, degree_cap);
        ProbeStatus status;
        if (reduces_to_zero(entries[i], sys))
            status = ProbeStatus::Redundant;
        else if (sys.capped)
            status = ProbeStatus::Inconclusive;
        else
            status = ProbeStatus::Irredundant;
        rep.per_entry.push_back(status);
        if (status == ProbeStatus::Redundant)
            ++rep.redundant;
        else if (status == ProbeStatus::Inconclusive)
            ++rep.inconclusive;
        else
            ++rep.irredundant;
    }
    return rep;
}

MinimalityReport minimality_probe(const GeneratorTable& table, const Int& degree_cap) {
    std::vector<Binomial> entries;
    entries.reserve(table.entries.size());
    for (const GeneratorEntry& e : table.entries) entries.push_back(e.binomial);
    return minimality_probe(entries, degree_cap);
}

CrossCheckReport cross_check(const SurfaceParams& params, const Int& bound,
                             const Int& degree_cap) {
    CrossCheckReport rep;
    rep.params = params;
    rep.bound = bound;
    rep.degree_cap = degree_cap;
    GeneratorTable table = generators_c4(params);
    std::vector<Binomial> entries;
    for (const GeneratorEntry& e : table.entries) entries.push_back(e.binomial);
    RewriteSystem sys = complete(entries, degree_cap);
    rep.capped = sys.capped;
    BoundedKernelSet kernel = enumerate_kernel(params, bound);
    rep.kernel_vectors = kernel.vectors.size();
    for (const IntVector& alpha : kernel.vectors) {
        KernelVector kv = split_kernel_vector(alpha);
        Binomial b = Binomial::from_exponents(kv.plus, kv.minus);
        if (!reduces_to_zero(b, sys)) {
            if (sys.capped)
                ++rep.inconclusive;
            else
                rep.unreduced.push_back(alpha);
        }
    }
    for (const GeneratorEntry& e : table.entries) {
        IntVector canonical = canonical_sign(e.binomial.kernel.alpha);
        if (vec_inf_norm(canonical) <= bound && !kernel.contains(canonical))
            rep.missing_from_enumeration.push_back(canonical);
    }
    return rep;
}

}  // namespace torisol
