// Product formulas, closed-form dispatch, and the identity checks that tie
// the region families together.

#include "tilecount/formulas.hpp"

#include "tilecount/engines.hpp"
#include "tilecount/graph.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <set>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace tilecount {

namespace {

void check_labels(const std::vector<int>& a, const char* fn) {
    if (a.empty()) throw std::invalid_argument(std::string(fn) + ": empty label list");
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] < 1)
            throw std::invalid_argument(std::string(fn) + ": labels must be positive");
        if (i > 0 && a[i] <= a[i - 1])
            throw std::invalid_argument(std::string(fn) + ": labels must be strictly increasing");
    }
}

// 0! 2! ... (2n-2)!
Int fact_even(std::size_t n) {
    Int p = 1;
    for (std::size_t i = 1; i <= n; ++i) p *= factorial(2 * static_cast<long>(i) - 2);
    return p;
}

// 1! 3! ... (2n-1)!
Int fact_odd(std::size_t n) {
    Int p = 1;
    for (std::size_t i = 1; i <= n; ++i) p *= factorial(2 * static_cast<long>(i) - 1);
    return p;
}

Int diff_prod(const std::vector<int>& a) {
    Int p = 1;
    for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t j = i + 1; j < a.size(); ++j) p *= a[j] - a[i];
    }
    return p;
}

// prod over i < j (or i <= j) of (a_i + a_j + off).
Int sum_prod(const std::vector<int>& a, bool include_diagonal, int off) {
    Int p = 1;
    for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t j = include_diagonal ? i : i + 1; j < a.size(); ++j)
            p *= a[i] + a[j] + off;
    }
    return p;
}

long sq(std::size_t n) { return static_cast<long>(n) * static_cast<long>(n); }

std::vector<int> even_list(int t) {
    std::vector<int> v;
    for (int i = 1; i <= t; ++i) v.push_back(2 * i);
    return v;
}

std::vector<int> odd_list(int t) {
    std::vector<int> v;
    for (int i = 1; i <= t; ++i) v.push_back(2 * i - 1);
    return v;
}

Rat quartered_R(int order) {
    switch (order % 4) {
        case 0:
            return order == 0 ? Rat(1) : eval_E(even_list(order / 4));
        case 3: {
            int t = (order + 1) / 4;
            return pow2(-t) * eval_E(even_list(t));
        }
        default:
            return 0;
    }
}

Rat quartered_Ka(int order) {
    if (order % 2 == 0) {
        int t = order % 4 == 2 ? (order + 2) / 4 : order / 4;
        return eval_E(odd_list(t));
    }
    int t = order % 4 == 3 ? (order + 1) / 4 : (order - 1) / 4;
    return t == 0 ? Rat(1) : Rat(pow2(-t) * eval_E(odd_list(t)));
}

Rat quartered_Kna(int order) {
    if (order % 2 == 0) {
        int t = order / 4;
        return t == 0 ? Rat(1) : eval_O(even_list(t));
    }
    int t = order % 4 == 1 ? (order + 3) / 4 : (order + 1) / 4;
    return pow2(-t) * eval_E(odd_list(t));
}

// prod_{i<j} (a_j - a_i) / (j - i), always an integer.
Rat diff_ratio(const std::vector<int>& a) {
    Rat p = 1;
    for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t j = i + 1; j < a.size(); ++j)
            p *= Rat(a[j] - a[i], static_cast<long>(j - i));
    }
    return p;
}

RegionSpec rspec(Family family, int m, int n, std::vector<int> a = {}) {
    RegionSpec s;
    s.family = family;
    s.m = m;
    s.n = n;
    s.a = std::move(a);
    return s;
}

Rat region_count(const RegionSpec& spec, std::size_t brute_guard = 100) {
    MatchGraph g = dual_graph(build_region(spec));
    if (g.vertex_count() <= brute_guard) return count_brute(g, brute_guard);
    return count_kasteleyn(g);
}

// Runs f(0..n-1) on a few worker threads; results land by index so the
// merged output is deterministic.
template <typename F>
void parallel_for(std::size_t n, F&& f) {
    unsigned hw = std::thread::hardware_concurrency();
    std::size_t workers = std::min<std::size_t>(n, hw == 0 ? 1 : hw);
    if (workers <= 1) {
        for (std::size_t i = 0; i < n; ++i) f(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::exception_ptr> errors(workers);
    std::vector<std::thread> pool;
    for (std::size_t t = 0; t < workers; ++t) {
        pool.emplace_back([&, t] {
            try {
                for (std::size_t i = next++; i < n; i = next++) f(i);
            } catch (...) {
                errors[t] = std::current_exception();
            }
        });
    }
    for (auto& th : pool) th.join();
    for (auto& e : errors) {
        if (e) std::rethrow_exception(e);
    }
}

}  // namespace

Rat eval_E(const std::vector<int>& a) {
    check_labels(a, "eval_E");
    return Rat((Int(1) << sq(a.size())) * diff_prod(a) * sum_prod(a, false, -1)) /
           Rat(fact_even(a.size()));
}

Rat eval_O(const std::vector<int>& a) {
    check_labels(a, "eval_O");
    return Rat((Int(1) << sq(a.size())) * diff_prod(a) * sum_prod(a, true, -1)) /
           Rat(fact_odd(a.size()));
}

Rat eval_Ebar(const std::vector<int>& a) {
    check_labels(a, "eval_Ebar");
    Int num = (Int(1) << sq(a.size()));
    for (int ai : a) num *= ai;
    return Rat(num * diff_prod(a) * sum_prod(a, true, 0)) / Rat(fact_even(a.size()));
}

Rat eval_Obar(const std::vector<int>& a) {
    check_labels(a, "eval_Obar");
    Int num = (Int(1) << sq(a.size()));
    for (int ai : a) num *= ai;
    return Rat(num * diff_prod(a) * sum_prod(a, false, 0)) / Rat(fact_odd(a.size()));
}

Int delta(std::vector<int> s) {
    if (s.empty()) throw std::invalid_argument("delta: empty set");
    std::sort(s.begin(), s.end());
    return diff_prod(s);
}

Rat closed_form(const RegionSpec& spec) {
    build_region(spec);  // validate the parameters exactly as the builders do
    const std::size_t k = spec.a.size();
    switch (spec.family) {
        case Family::AztecDiamond:
            return pow2(static_cast<long>(spec.n) * (spec.n + 1) / 2);
        case Family::AztecRectangle:
            if (spec.m != spec.n) return 0;
            return pow2(static_cast<long>(spec.n) * (spec.n + 1) / 2);
        case Family::TrimmedAztecDiamond:
        case Family::TrimmedAztecRectangle:
            throw std::invalid_argument("no closed form in source for family " +
                                        family_name(spec.family));
        case Family::RE:
            return eval_E(spec.a);
        case Family::RO:
            return eval_O(spec.a);
        case Family::TE:
            return pow2(-static_cast<long>(k)) * eval_O(spec.a);
        case Family::TO:
            return pow2(-static_cast<long>(k)) * eval_E(spec.a);
        case Family::BarRE:
            return pow2(static_cast<long>(k)) * eval_Obar(spec.a);
        case Family::BarRO:
            return Rat((Int(1) << sq(k)) * diff_prod(spec.a) * sum_prod(spec.a, false, 0)) /
                   Rat(fact_even(k));
        case Family::BarTE:
            return eval_Obar(spec.a);
        case Family::BarTO:
            return eval_Ebar(spec.a) / Rat(factorial(2 * static_cast<long>(k)));
        case Family::QuarteredR:
            return quartered_R(spec.n);
        case Family::QuarteredKa:
            return quartered_Ka(spec.n);
        case Family::QuarteredKna:
            return quartered_Kna(spec.n);
        case Family::QH:
            if (spec.m % 2 != 0) return pow2(-sq(k)) * eval_E(spec.a);
            return pow2(-sq(k)) * eval_Obar(spec.a);
        case Family::BarQH:
            if (spec.m % 2 != 0)
                return pow2(-static_cast<long>(k) * (static_cast<long>(k) + 1)) *
                       eval_Ebar(spec.a) / Rat(factorial(2 * static_cast<long>(k)));
            return pow2(-static_cast<long>(k) * (static_cast<long>(k) + 1)) * eval_O(spec.a);
        case Family::SemiHexagon:
            return diff_ratio(spec.a);
        case Family::HoleyAR:
            return pow2(static_cast<long>(k) * (static_cast<long>(k) + 1) / 2) *
                   diff_ratio(spec.a);
        case Family::HoleyARBar:
            return pow2(static_cast<long>(k) * (static_cast<long>(k) - 1) / 2) *
                   diff_ratio(spec.a);
    }
    throw std::logic_error("closed_form: unhandled family");
}

Eq9Report check_eq9(int n) {
    if (n < 1) throw std::invalid_argument("check_eq9: n must be >= 1");
    Eq9Report r;
    r.even_side = eval_E(even_list(n));
    r.odd_side = eval_O(odd_list(n));
    r.product = pow2(static_cast<long>(n) * (3 * static_cast<long>(n) - 1) / 2);
    for (int i = 1; i <= n; ++i) {
        for (int j = i + 1; j <= n; ++j) r.product *= Rat(2 * i + 2 * j - 1, i + j - 1);
    }
    r.pass = r.even_side == r.odd_side && r.odd_side == r.product;
    return r;
}

KratReport check_krattenthaler(const std::vector<Int>& x, const std::vector<Int>& a,
                               const Int& c) {
    if (x.empty()) throw std::invalid_argument("check_krattenthaler: empty x list");
    if (x.size() != a.size())
        throw std::invalid_argument("check_krattenthaler: x and a lengths differ");
    const std::size_t n = x.size();
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            Int e = 1;
            for (std::size_t t = j + 1; t < n; ++t) e *= x[i] - a[t] - c;
            for (std::size_t t = j + 1; t < n; ++t) e *= x[i] + a[t];
            m.at(i, j) = e;
        }
    }
    KratReport r;
    r.det = det_exact(m);
    r.product = 1;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j)
            r.product *= (x[j] - x[i]) * (c - x[i] - x[j]);
    }
    r.pass = r.det == r.product;
    return r;
}

namespace {

struct IdentityInstance {
    RegionSpec lhs;
    Rat factor;
    std::vector<RegionSpec> rhs;
};

// The sorted set {lo_base - a_i} ∪ {hi_base + a_i}, plus `center` if nonzero.
std::vector<int> mirror_union(int lo_base, int hi_base, int center, const std::vector<int>& a) {
    std::set<int> s;
    for (int ai : a) {
        s.insert(lo_base - ai);
        s.insert(hi_base + ai);
    }
    if (center != 0) s.insert(center);
    return {s.begin(), s.end()};
}

IdentityInstance identity_sides(const std::string& tag, int k, int n,
                                const std::vector<int>& a) {
    if (k < 1) throw std::invalid_argument("identity: k must be >= 1");
    if (static_cast<int>(a.size()) != k)
        throw std::invalid_argument("identity: label list must have exactly k entries");
    auto one = [&](Family lf, int lm, Family rf, int rm, long exp = 0) {
        return IdentityInstance{rspec(lf, lm, n, a), pow2(exp), {rspec(rf, rm, n, a)}};
    };
    if (tag == "lem2-eq5") return one(Family::RE, 2 * k - 1, Family::RE, 2 * k);
    if (tag == "lem2-eq6") return one(Family::RO, 2 * k, Family::RO, 2 * k + 1);
    if (tag == "lem2-eq7") return one(Family::TE, 2 * k, Family::TE, 2 * k + 1);
    if (tag == "lem2-eq8") return one(Family::TO, 2 * k - 1, Family::TO, 2 * k);
    if (tag == "lem3-eq1") return one(Family::RE, 2 * k - 1, Family::TO, 2 * k - 1, k);
    if (tag == "lem3-eq2") return one(Family::RO, 2 * k, Family::TE, 2 * k, k);
    if (tag == "lem11-eq3")
        return one(Family::TO, 2 * k - 1, Family::QH, 2 * k - 1, static_cast<long>(k) * (k - 1));
    if (tag == "lem11-QHex3")
        return one(Family::BarTE, 2 * k, Family::QH, 2 * k, static_cast<long>(k) * k);
    if (tag == "fn1") return one(Family::BarRO, 2 * k - 1, Family::BarRO, 2 * k);
    if (tag == "fn2") return one(Family::BarRE, 2 * k, Family::BarRE, 2 * k + 1);
    if (tag == "fn3") return one(Family::BarTO, 2 * k + 1, Family::BarTO, 2 * k + 2);
    if (tag == "fn4") return one(Family::BarTE, 2 * k, Family::BarTE, 2 * k + 1);
    if (tag == "qhfactor1")
        return {rspec(Family::SemiHexagon, 2 * k, 2 * (n - k), mirror_union(n + 1, n, 0, a)),
                pow2(k),
                {rspec(Family::QH, 2 * k - 1, n, a), rspec(Family::BarQH, 2 * k, n, a)}};
    if (tag == "qhfactor2")
        return {rspec(Family::SemiHexagon, 2 * k + 1, 2 * (n - k),
                      mirror_union(n + 1, n + 1, n + 1, a)),
                pow2(k),
                {rspec(Family::QH, 2 * k, n, a), rspec(Family::BarQH, 2 * k + 1, n, a)}};
    if (tag == "factoreq2")
        return {rspec(Family::HoleyAR, 2 * k, 2 * n, mirror_union(n + 1, n, 0, a)),
                pow2(k),
                {rspec(Family::RE, 2 * k, n, a), rspec(Family::RO, 2 * k, n, a)}};
    if (tag == "factorn1")
        return {rspec(Family::HoleyAR, 2 * k, 2 * n - 1, mirror_union(n, n, 0, a)),
                pow2(k),
                {rspec(Family::BarRO, 2 * k - 1, n, a), rspec(Family::BarRE, 2 * k, n, a)}};
    if (tag == "factorn2")
        return {rspec(Family::HoleyARBar, 2 * k + 1, 2 * n, mirror_union(n + 1, n + 1, n + 1, a)),
                pow2(k),
                {rspec(Family::BarTO, 2 * k + 1, n, a), rspec(Family::BarTE, 2 * k, n, a)}};
    throw std::invalid_argument("unknown identity tag: " + tag);
}

// nmin = k + offset, amax = n + offset, per tag.
struct TagBounds {
    int nmin_off;
    int amax_off;
};

TagBounds tag_bounds(const std::string& tag) {
    // Every identity requires k < n; the barred-rectangle and odd barred-
    // hexagon sides only admit labels up to n - 1.
    if (tag == "fn1" || tag == "fn2" || tag == "qhfactor2" || tag == "factorn1") return {1, -1};
    identity_sides(tag, 1, 2, {1});  // validates the tag name
    return {1, 0};
}

}  // namespace

const std::vector<std::string>& identity_tags() {
    static const std::vector<std::string> tags = {
        "lem2-eq5", "lem2-eq6", "lem2-eq7",   "lem2-eq8",    "lem3-eq1",  "lem3-eq2",
        "lem11-eq3", "lem11-QHex3", "fn1",    "fn2",         "fn3",       "fn4",
        "qhfactor1", "qhfactor2", "factoreq2", "factorn1",   "factorn2",
    };
    return tags;
}

IdentityReport check_identity(const std::string& tag, int k, int n, const std::vector<int>& a) {
    IdentityInstance inst = identity_sides(tag, k, n, a);
    IdentityReport rep;
    rep.factor = inst.factor;
    rep.lhs = region_count(inst.lhs);
    rep.rhs = inst.factor;
    std::ostringstream d;
    d << tag << ": M(" << spec_str(inst.lhs) << ") = " << rat_str(inst.factor);
    for (const auto& part : inst.rhs) {
        rep.rhs *= region_count(part);
        d << " * M(" << spec_str(part) << ")";
    }
    rep.description = d.str();
    rep.pass = rep.lhs == rep.rhs;
    return rep;
}

std::vector<std::tuple<int, int, std::vector<int>>> identity_instances(const std::string& tag,
                                                                       int kmax, int nmax) {
    TagBounds b = tag_bounds(tag);
    std::vector<std::tuple<int, int, std::vector<int>>> out;
    for (int k = 1; k <= kmax; ++k) {
        for (int n = k + b.nmin_off; n <= nmax; ++n) {
            int amax = n + b.amax_off;
            if (amax < k) continue;
            for (auto& a : combinations(amax, k)) out.emplace_back(k, n, a);
        }
    }
    return out;
}

std::vector<VerifyCase> verify_family(Family family, int kmax, int nmax) {
    std::vector<RegionSpec> specs;
    // m runs over {2k + m_off1, 2k + m_off2}; n >= k + nmin_off; labels <= n + amax_off.
    auto labeled = [&](int m_off1, int m_off2, int nmin_off, int amax_off) {
        for (int k = 1; k <= kmax; ++k) {
            for (int m : {2 * k + m_off1, 2 * k + m_off2}) {
                for (int n = k + nmin_off; n <= nmax; ++n) {
                    int amax = n + amax_off;
                    if (amax < k) continue;
                    for (auto& a : combinations(amax, k)) specs.push_back(rspec(family, m, n, a));
                }
            }
        }
    };
    switch (family) {
        case Family::AztecDiamond:
            for (int n = 1; n <= nmax; ++n) specs.push_back(rspec(family, 0, n));
            break;
        case Family::AztecRectangle:
            for (int m = 1; m <= nmax; ++m) {
                for (int n = 1; n <= nmax; ++n) specs.push_back(rspec(family, m, n));
            }
            break;
        case Family::QuarteredR:
        case Family::QuarteredKa:
        case Family::QuarteredKna:
            for (int order = 1; order <= nmax; ++order) specs.push_back(rspec(family, 0, order));
            break;
        case Family::RE:
        case Family::TO:
            labeled(-1, 0, 1, 0);
            break;
        case Family::RO:
        case Family::TE:
            labeled(0, 1, 1, 0);
            break;
        case Family::BarRE:
            labeled(0, 1, 1, -1);
            break;
        case Family::BarRO:
            labeled(-1, 0, 1, -1);
            break;
        case Family::BarTE:
            labeled(0, 1, 1, 0);
            break;
        case Family::BarTO:
            labeled(1, 2, 1, 0);
            break;
        case Family::QH:
            labeled(-1, 0, 1, 0);
            break;
        case Family::BarQH:
            for (int k = 1; k <= kmax; ++k) {
                for (int n = k + 1; n <= nmax; ++n) {
                    for (auto& a : combinations(n, k)) specs.push_back(rspec(family, 2 * k, n, a));
                    for (auto& a : combinations(n - 1, k))
                        specs.push_back(rspec(family, 2 * k + 1, n, a));
                }
            }
            break;
        case Family::SemiHexagon:
            for (int rows = 1; rows <= kmax; ++rows) {
                for (int b = 0; b + rows <= nmax; ++b) {
                    for (auto& s : combinations(rows + b, rows))
                        specs.push_back(rspec(family, rows, b, s));
                }
            }
            break;
        case Family::HoleyAR:
            for (int m = 1; m <= kmax; ++m) {
                for (int n = m; n <= nmax; ++n) {
                    for (auto& a : combinations(n, m)) specs.push_back(rspec(family, m, n, a));
                }
            }
            break;
        case Family::HoleyARBar:
            for (int m = 1; m <= kmax; ++m) {
                for (int n = std::max(1, m - 1); n <= nmax; ++n) {
                    for (auto& a : combinations(n + 1, m)) specs.push_back(rspec(family, m, n, a));
                }
            }
            break;
        default:
            throw std::invalid_argument("verify_family: family " + family_name(family) +
                                        " has no closed form to verify");
    }

    const bool with_lgv = family == Family::QH;
    std::vector<VerifyCase> cases(specs.size() * (with_lgv ? 2 : 1));
    parallel_for(specs.size(), [&](std::size_t i) {
        const RegionSpec& spec = specs[i];
        VerifyCase c;
        c.description = spec_str(spec);
        c.formula = closed_form(spec);
        c.engine = region_count(spec);
        c.pass = c.formula == c.engine;
        if (with_lgv) {
            VerifyCase l;
            l.description = spec_str(spec) + " [lgv]";
            l.formula = c.formula;
            l.engine = Rat(count_lgv(spec));
            l.pass = l.formula == l.engine;
            cases[2 * i] = std::move(c);
            cases[2 * i + 1] = std::move(l);
        } else {
            cases[i] = std::move(c);
        }
    });
    return cases;
}

}  // namespace tilecount
