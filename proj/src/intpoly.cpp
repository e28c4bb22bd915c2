#include "specdiss/intpoly.hpp"

#include <algorithm>
#include <sstream>

#include "specdiss/errors.hpp"

namespace specdiss {

void IntPolynomial::normalize() {
    while (!coeffs.empty() && coeffs.back() == 0) coeffs.pop_back();
}

mpz_class IntPolynomial::eval_int(const mpz_class& x) const {
    mpz_class acc = 0;
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * x + *it;
    return acc;
}

int IntPolynomial::sign_at(const mpq_class& x) const {
    if (is_zero()) return 0;
    // homogeneous evaluation: sum c_i * num^i * den^(d-i) has the sign of p(x)
    const mpz_class& num = x.get_num();
    const mpz_class& den = x.get_den();
    mpz_class acc = 0;
    mpz_class den_pow = 1;
    std::vector<mpz_class> num_pows(coeffs.size());
    mpz_class np = 1;
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        num_pows[i] = np;
        np *= num;
    }
    for (std::size_t i = coeffs.size(); i-- > 0;) {
        acc += coeffs[i] * num_pows[i] * den_pow;
        den_pow *= den;
    }
    return sgn(acc);
}

std::string IntPolynomial::to_json() const {
    std::ostringstream os;
    os << '[';
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        if (i) os << ',';
        os << '"' << coeffs[i].get_str() << '"';
    }
    os << ']';
    return os.str();
}

IntPolynomial IntPolynomial::from_json(const std::string& text) {
    std::vector<mpz_class> cs;
    std::size_t i = 0;
    auto skip_ws = [&] {
        while (i < text.size() && (text[i] == ' ' || text[i] == '\n' || text[i] == '\t')) ++i;
    };
    skip_ws();
    if (i >= text.size() || text[i] != '[') throw parse_error("polynomial: expected '['", i);
    ++i;
    skip_ws();
    if (i < text.size() && text[i] == ']') return IntPolynomial{};
    while (true) {
        skip_ws();
        std::string token;
        bool quoted = i < text.size() && text[i] == '"';
        if (quoted) ++i;
        while (i < text.size() && (text[i] == '-' || (text[i] >= '0' && text[i] <= '9'))) token.push_back(text[i++]);
        if (token.empty()) throw parse_error("polynomial: expected integer", i);
        if (quoted) {
            if (i >= text.size() || text[i] != '"') throw parse_error("polynomial: expected closing quote", i);
            ++i;
        }
        cs.emplace_back(token);
        skip_ws();
        if (i >= text.size()) throw parse_error("polynomial: truncated", i);
        if (text[i] == ']') break;
        if (text[i] != ',') throw parse_error("polynomial: expected ',' or ']'", i);
        ++i;
    }
    return IntPolynomial(std::move(cs));
}

IntPolynomial derivative(const IntPolynomial& p) {
    if (p.degree() <= 0) return IntPolynomial{};
    std::vector<mpz_class> out(p.coeffs.size() - 1);
    for (std::size_t i = 1; i < p.coeffs.size(); ++i) out[i - 1] = p.coeffs[i] * static_cast<long>(i);
    return IntPolynomial(std::move(out));
}

namespace {

mpz_class content(const IntPolynomial& p) {
    mpz_class g = 0;
    for (const auto& c : p.coeffs) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
        if (g == 1) break;
    }
    return g;
}

// Pseudo-remainder of a by b scaled so the result is a true positive
// multiple of rem(a, b); content-reduced to tame coefficient growth.
IntPolynomial signed_prem(const IntPolynomial& a, const IntPolynomial& b) {
    IntPolynomial r = a;
    const int db = b.degree();
    const mpz_class& lb = b.leading();
    int flips = 0;
    while (!r.is_zero() && r.degree() >= db) {
        int shift = r.degree() - db;
        mpz_class lr = r.leading();
        for (auto& c : r.coeffs) c *= lb;
        for (int i = 0; i <= db; ++i) r.coeffs[shift + i] -= lr * b.coeffs[i];
        r.normalize();
        if (sgn(lb) < 0) ++flips;
    }
    if (flips % 2 == 1)
        for (auto& c : r.coeffs) c = -c;
    if (!r.is_zero()) {
        mpz_class g = content(r);
        if (g > 1)
            for (auto& c : r.coeffs) c /= g;
    }
    return r;
}

std::vector<IntPolynomial> sturm_chain(const IntPolynomial& squarefree) {
    std::vector<IntPolynomial> chain;
    chain.push_back(squarefree);
    chain.push_back(primitive_part(derivative(squarefree)));
    while (!chain.back().is_zero() && chain.back().degree() > 0) {
        IntPolynomial r = signed_prem(chain[chain.size() - 2], chain.back());
        for (auto& c : r.coeffs) c = -c;
        if (r.is_zero()) break;
        chain.push_back(std::move(r));
    }
    return chain;
}

int sign_variations_at(const std::vector<IntPolynomial>& chain, const mpq_class& x) {
    int variations = 0;
    int prev = 0;
    for (const auto& p : chain) {
        int s = p.sign_at(x);
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++variations;
        prev = s;
    }
    return variations;
}

int count_in(const std::vector<IntPolynomial>& chain, const mpq_class& a, const mpq_class& b) {
    return sign_variations_at(chain, a) - sign_variations_at(chain, b);
}

}  // namespace

IntPolynomial primitive_part(const IntPolynomial& p) {
    if (p.is_zero()) return p;
    IntPolynomial out = p;
    mpz_class g = content(p);
    if (g > 1)
        for (auto& c : out.coeffs) c /= g;
    return out;
}

IntPolynomial poly_gcd(const IntPolynomial& a, const IntPolynomial& b) {
    IntPolynomial f = primitive_part(a), g = primitive_part(b);
    if (f.is_zero()) std::swap(f, g);
    while (!g.is_zero()) {
        IntPolynomial r = signed_prem(f, g);
        f = std::move(g);
        g = std::move(r);
    }
    if (!f.is_zero() && sgn(f.leading()) < 0)
        for (auto& c : f.coeffs) c = -c;
    return f;
}

IntPolynomial squarefree_part(const IntPolynomial& p) {
    if (p.degree() <= 1) return primitive_part(p);
    IntPolynomial g = poly_gcd(p, derivative(p));
    if (g.degree() == 0) return primitive_part(p);
    // exact division p / g over the rationals lands back in Z up to content
    IntPolynomial num = p;
    std::vector<mpz_class> q(p.coeffs.size() - g.coeffs.size() + 1, 0);
    const mpz_class& lg = g.leading();
    // scale as needed to keep division exact, strip content at the end
    while (!num.is_zero() && num.degree() >= g.degree()) {
        int shift = num.degree() - g.degree();
        mpz_class ln = num.leading();
        if (ln % lg != 0) {
            for (auto& c : num.coeffs) c *= lg;
            for (auto& c : q) c *= lg;
            ln = num.leading();
        }
        mpz_class factor = ln / lg;
        q[shift] += factor;
        for (int i = 0; i <= g.degree(); ++i) num.coeffs[shift + i] -= factor * g.coeffs[i];
        num.normalize();
    }
    IntPolynomial out(std::move(q));
    out = primitive_part(out);
    if (!out.is_zero() && sgn(out.leading()) < 0)
        for (auto& c : out.coeffs) c = -c;
    return out;
}

int sturm_root_count(const IntPolynomial& p, const mpq_class& a, const mpq_class& b) {
    if (a >= b) throw invalid_interval("sturm_root_count: requires a < b");
    if (p.is_zero()) throw invalid_parameter("sturm_root_count: zero polynomial");
    IntPolynomial sf = squarefree_part(p);
    if (sf.degree() == 0) return 0;
    return count_in(sturm_chain(sf), a, b);
}

int count_real_roots(const IntPolynomial& p) {
    IntPolynomial sf = squarefree_part(p);
    if (sf.degree() <= 0) return 0;
    mpq_class u = root_bound(p);
    return count_in(sturm_chain(sf), -u, u);
}

mpq_class root_bound(const IntPolynomial& p) {
    if (p.is_zero() || p.degree() == 0) return 1;
    mpz_class maxc = 0;
    for (int i = 0; i < p.degree(); ++i) {
        mpz_class a = abs(p.coeffs[i]);
        if (a > maxc) maxc = a;
    }
    mpq_class bound(maxc, abs(p.leading()));
    bound += 1;
    bound.canonicalize();
    return bound;
}

void LargestRoot::refine() {
    if (exact) return;
    mpq_class mid = (lo + hi) / 2;
    if (squarefree.sign_at(mid) == 0) {
        exact = mid;
        lo = hi = mid;
        return;
    }
    auto chain = sturm_chain(squarefree);
    if (count_in(chain, mid, hi) == 1)
        lo = mid;
    else
        hi = mid;
}

double LargestRoot::midpoint() const {
    if (exact) return exact->get_d();
    return (mpq_class((lo + hi) / 2)).get_d();
}

LargestRoot isolate_largest_root(const IntPolynomial& p) {
    if (p.is_zero() || p.degree() == 0) throw invalid_parameter("isolate_largest_root: constant polynomial");
    LargestRoot out;
    out.squarefree = squarefree_part(p);
    mpq_class u = root_bound(p);
    auto chain = sturm_chain(out.squarefree);
    mpq_class lo = -u, hi = u;
    int total = count_in(chain, lo, hi);
    if (total == 0) throw invalid_parameter("isolate_largest_root: no real roots");
    while (count_in(chain, lo, hi) > 1) {
        mpq_class mid = (lo + hi) / 2;
        if (out.squarefree.sign_at(mid) == 0 && count_in(chain, mid, hi) == 0) {
            out.exact = mid;
            out.lo = out.hi = mid;
            return out;
        }
        if (count_in(chain, mid, hi) >= 1)
            lo = mid;
        else
            hi = mid;
    }
    out.lo = lo;
    out.hi = hi;
    return out;
}

Ordering compare_largest_roots(const IntPolynomial& p1, const IntPolynomial& p2) {
    if (p1 == p2) return Ordering::EQ;
    LargestRoot r1 = isolate_largest_root(p1);
    LargestRoot r2 = isolate_largest_root(p2);

    auto split_at = [](LargestRoot& r, const mpq_class& x) {
        // x strictly inside (lo, hi) and not a root: shrink to the side with the root
        auto chain = sturm_chain(r.squarefree);
        if (count_in(chain, x, r.hi) == 1)
            r.lo = x;
        else
            r.hi = x;
    };

    IntPolynomial g = poly_gcd(squarefree_part(p1), squarefree_part(p2));
    const bool common_possible = g.degree() >= 1;

    for (int round = 0; round < 4096; ++round) {
        if (r1.exact && r2.exact) return *r1.exact < *r2.exact ? Ordering::LT : (*r1.exact > *r2.exact ? Ordering::GT : Ordering::EQ);
        if (r1.exact && !r2.exact) {
            if (r2.squarefree.sign_at(*r1.exact) == 0 && *r1.exact > r2.lo && *r1.exact <= r2.hi) return Ordering::EQ;
            if (*r1.exact <= r2.lo) return Ordering::LT;
            if (*r1.exact >= r2.hi) return Ordering::GT;
            split_at(r2, *r1.exact);
            continue;
        }
        if (r2.exact && !r1.exact) {
            if (r1.squarefree.sign_at(*r2.exact) == 0 && *r2.exact > r1.lo && *r2.exact <= r1.hi) return Ordering::EQ;
            if (*r2.exact <= r1.lo) return Ordering::GT;
            if (*r2.exact >= r1.hi) return Ordering::LT;
            split_at(r1, *r2.exact);
            continue;
        }
        if (r1.hi <= r2.lo) return Ordering::LT;
        if (r2.hi <= r1.lo) return Ordering::GT;
        if (common_possible) {
            mpq_class ilo = std::max(r1.lo, r2.lo);
            mpq_class ihi = std::min(r1.hi, r2.hi);
            if (ilo < ihi && sturm_root_count(g, ilo, ihi) >= 1) return Ordering::EQ;
        }
        r1.refine();
        r2.refine();
    }
    throw error("compare_largest_roots: failed to separate roots");
}

}  // namespace specdiss
