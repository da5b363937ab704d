#include "rhomax/singularities.hpp"

#include <algorithm>
#include <sstream>

namespace rhomax {

// ---------------------------------------------------------------------------
// AdeType
// ---------------------------------------------------------------------------

AdeType AdeType::A(long n) {
    if (n < 1) throw Error("shape", "A-type index must be >= 1");
    return {'A', n};
}

AdeType AdeType::D(long n) {
    if (n < 3) throw Error("shape", "D-type index must be >= 3");
    if (n == 3) return A(3);  // same Dynkin diagram
    return {'D', n};
}

AdeType AdeType::E(long n) {
    if (n < 6 || n > 8) throw Error("shape", "E-type index must be 6, 7 or 8");
    return {'E', n};
}

AdeType AdeType::make(char letter, long index) {
    switch (letter) {
        case 'A': return A(index);
        case 'D': return D(index);
        case 'E': return E(index);
        default: throw Error("shape", std::string("unknown ADE letter '") + letter + "'");
    }
}

AdeType AdeType::parse(const std::string& label) {
    if (label.size() < 2) throw Error("parse", "bad ADE label: " + label);
    try {
        return make(label[0], std::stoll(label.substr(1)));
    } catch (const std::invalid_argument&) {
        throw Error("parse", "bad ADE label: " + label);
    }
}

IntMat dynkin_matrix(const AdeType& t) {
    if (t.index > 4096) throw Error("parameter", "refusing to materialize a Dynkin matrix of rank " +
                                                     std::to_string(t.index));
    const std::size_t n = (std::size_t)t.index;
    IntMat m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = -2;
    auto link = [&](std::size_t a, std::size_t b) {
        m.at(a, b) = 1;
        m.at(b, a) = 1;
    };
    if (t.letter == 'A') {
        for (std::size_t i = 0; i + 1 < n; ++i) link(i, i + 1);
    } else if (t.letter == 'D') {
        // chain 0..n-2, with n-1 hanging off n-3
        for (std::size_t i = 0; i + 2 < n; ++i) link(i, i + 1);
        link(n - 3, n - 1);
    } else {
        // chain 0..n-2, with n-1 hanging off vertex 2
        for (std::size_t i = 0; i + 2 < n; ++i) link(i, i + 1);
        link(2, n - 1);
    }
    return m;
}

// ---------------------------------------------------------------------------
// SingularityCensus
// ---------------------------------------------------------------------------

void SingularityCensus::add(const AdeType& t, const Int& count) {
    if (count < 0) throw Error("shape", "negative census count");
    if (count == 0) return;
    counts_[t] += count;
}

void SingularityCensus::merge(const SingularityCensus& o) {
    for (const auto& [t, c] : o.counts_) add(t, c);
}

Int SingularityCensus::count(const AdeType& t) const {
    auto it = counts_.find(t);
    return it == counts_.end() ? Int(0) : it->second;
}

Int SingularityCensus::total_rank() const {
    Int r = 0;
    for (const auto& [t, c] : counts_) r += Int(t.rank()) * c;
    return r;
}

std::string SingularityCensus::text() const {
    std::ostringstream os;
    os << "{";
    bool first = true;
    for (const auto& [t, c] : counts_) {
        if (!first) os << ", ";
        first = false;
        os << t.label() << ":" << c.get_str();
    }
    os << "}";
    return os.str();
}

// ---------------------------------------------------------------------------
// Germs
// ---------------------------------------------------------------------------

Germ Germ::of(Poly2 p) {
    if (p.is_zero()) throw Error("precondition", "the zero polynomial is not a germ");
    if (p.at_origin() != 0)
        throw Error("precondition", "unit germ: polynomial does not vanish at the origin");
    return Germ{std::move(p)};
}

Germ Germ::parse(const std::string& text) { return of(parse_poly2(text)); }

std::string GermClass::label() const {
    switch (kind) {
        case Kind::Smooth: return "Smooth";
        case Kind::Ade: return type->label();
        case Kind::NonIsolated: return "NonIsolated";
        case Kind::NotAde: return "NotAde";
    }
    return "?";
}

MilnorOptions& milnor_defaults() {
    static MilnorOptions opt;
    return opt;
}

// ---------------------------------------------------------------------------
// Milnor number: dim Q[[x,y]]/(f_x, f_y).
//
// d_N := dim Q[x,y]/(f_x, f_y, m^N) is nondecreasing in N, and d_N = d_{N+1}
// forces m^N inside the Jacobian ideal (Nakayama), after which d is constant
// and equal to mu. A mod-p pass locates the stabilization value v = mu_p
// first; since reduction mod p can only lower ranks, mu <= v, so one exact
// integer elimination at truncation v+1 returns mu itself.
// ---------------------------------------------------------------------------

namespace {

struct IntTerm {
    int i, j;
    Int c;
};

std::vector<IntTerm> integer_terms(const Poly2& f) {
    Int den = 1;
    for (const auto& [m, c] : f.terms()) {
        Int d = c.get_den(), g;
        mpz_gcd(g.get_mpz_t(), den.get_mpz_t(), d.get_mpz_t());
        den = den / g * d;
    }
    std::vector<IntTerm> ts;
    for (const auto& [m, c] : f.terms()) {
        Rat v = c * Rat(den);
        ts.push_back({m.i, m.j, v.get_num()});
    }
    return ts;
}

int min_order(const std::vector<IntTerm>& ts) {
    int o = 1 << 20;
    for (const auto& t : ts) o = std::min(o, t.i + t.j);
    return o;
}

// columns: monomials of total degree < N in graded order
std::size_t col_index(int i, int j) {
    const int d = i + j;
    return (std::size_t)d * (d + 1) / 2 + j;
}

SparseRows truncation_matrix(const std::vector<IntTerm>& fx, const std::vector<IntTerm>& fy, int N) {
    SparseRows m;
    m.cols = (std::size_t)N * (N + 1) / 2;
    for (const auto* g : {&fx, &fy}) {
        if (g->empty()) continue;
        const int og = min_order(*g);
        for (int dm = 0; dm + og < N; ++dm) {
            for (int a = 0; a <= dm; ++a) {
                const int b = dm - a;
                std::vector<std::pair<std::size_t, Int>> row;
                for (const auto& t : *g)
                    if (a + t.i + b + t.j < N) row.emplace_back(col_index(a + t.i, b + t.j), t.c);
                if (row.empty()) continue;
                std::sort(row.begin(), row.end(),
                          [](const auto& x, const auto& y) { return x.first < y.first; });
                m.rows.push_back(std::move(row));
            }
        }
    }
    return m;
}

Int quotient_dim_exact(const std::vector<IntTerm>& fx, const std::vector<IntTerm>& fy, int N) {
    SparseRows m = truncation_matrix(fx, fy, N);
    return Int(m.cols) - Int(sparse_rank_exact(m));
}

Int quotient_dim_mod_p(const std::vector<IntTerm>& fx, const std::vector<IntTerm>& fy, int N,
                       std::uint32_t p) {
    SparseRows m = truncation_matrix(fx, fy, N);
    return Int(m.cols) - Int(sparse_rank_mod_p(m, p));
}

}  // namespace

MilnorResult milnor_number(const Germ& g, const MilnorOptions& opt) {
    const Poly2& f = g.poly;
    if (f.is_zero()) throw Error("precondition", "milnor number of the zero germ");
    if (f.at_origin() != 0) throw Error("precondition", "milnor number of a unit germ");

    const Poly2 fx = f.dx(), fy = f.dy();
    if (fx.coeff(0, 0) != 0 || fy.coeff(0, 0) != 0) return {true, 0};  // smooth germ

    const auto tx = integer_terms(fx);
    const auto ty = integer_terms(fy);
    const int d = f.degree();
    const int bound = opt.degree_bound > 0 ? opt.degree_bound : std::max(4, 2 * d * d);

    // mod-p pass: find the stabilized dimension v
    Int prev = -1;
    for (int N = 1; N <= bound + 1; ++N) {
        Int cur = quotient_dim_mod_p(tx, ty, N, opt.prime);
        if (N > 1 && cur == prev) {
            const long v = to_ll(cur);
            Int mu = quotient_dim_exact(tx, ty, (int)v + 1);
            if (mu > cur) throw Error("internal", "exact local dimension exceeded the mod-p bound");
            return {true, mu};
        }
        prev = cur;
    }

    // degenerate reduction or genuinely non-isolated: settle over Q
    Int prevq = quotient_dim_exact(tx, ty, 2);
    for (int N = 3; N <= bound + 1; N = (N <= 4 ? N + 1 : (N - 1) * 2 + 1)) {
        Int cur = quotient_dim_exact(tx, ty, N);
        // nondecreasing sequence equal at two truncations is stabilized
        if (cur == prevq) return {true, cur};
        prevq = cur;
    }
    return {false, 0};
}

// ---------------------------------------------------------------------------
// Germ classification
// ---------------------------------------------------------------------------

namespace {

enum class CubicShape { Distinct, Repeated, Triple };

// root multiplicity structure of a nonzero binary cubic over the algebraic
// closure, by exact gcd arithmetic on the dehomogenization
CubicShape cubic_shape(const Poly2& cubic) {
    QPoly1 p;  // cubic(t, 1)
    for (const auto& [m, c] : cubic.terms()) {
        if ((int)p.size() <= m.i) p.resize(m.i + 1, Rat(0));
        p[m.i] = c;
    }
    const int dp = deg1(p);
    const int at_infinity = 3 - dp;  // multiplicity of the root y = 0
    if (at_infinity == 3) return CubicShape::Triple;
    if (at_infinity == 2) return CubicShape::Repeated;
    if (at_infinity == 1) {
        // one root at infinity, quadratic finite part
        const Rat disc = p[1] * p[1] - 4 * p[2] * p[0];
        return disc == 0 ? CubicShape::Repeated : CubicShape::Distinct;
    }
    QPoly1 h = gcd1(p, derivative1(p));
    switch (deg1(h)) {
        case 0: return CubicShape::Distinct;
        case 1: return CubicShape::Repeated;
        default: return CubicShape::Triple;
    }
}

}  // namespace

GermClass classify_germ(const Germ& g, const MilnorOptions& opt) {
    const Poly2& f = g.poly;
    if (f.is_zero()) throw Error("precondition", "cannot classify the zero germ");
    if (f.at_origin() != 0) throw Error("precondition", "cannot classify a unit germ");

    if (!f.part(1).is_zero()) return GermClass::smooth();

    const MilnorResult mr = milnor_number(g, opt);
    if (!mr.isolated) return GermClass::non_isolated();
    const Int& mu = mr.mu;

    // corank of the quadratic part
    const Rat a = f.coeff(2, 0), b = f.coeff(1, 1), c = f.coeff(0, 2);
    int corank;
    if (a == 0 && b == 0 && c == 0)
        corank = 2;
    else if (4 * a * c - b * b != 0)
        corank = 0;
    else
        corank = 1;

    if (corank == 0) return mu == 1 ? GermClass::ade(AdeType::A(1)) : GermClass::not_ade();
    if (corank == 1) return mu >= 2 ? GermClass::ade(AdeType::A(to_ll(mu))) : GermClass::not_ade();

    const Poly2 cubic = f.part(3);
    if (cubic.is_zero()) return GermClass::not_ade();
    switch (cubic_shape(cubic)) {
        case CubicShape::Distinct:
            return mu == 4 ? GermClass::ade(AdeType::D(4)) : GermClass::not_ade();
        case CubicShape::Repeated:
            return mu >= 5 ? GermClass::ade(AdeType::D(to_ll(mu))) : GermClass::not_ade();
        case CubicShape::Triple:
            if (mu >= 6 && mu <= 8) return GermClass::ade(AdeType::E(to_ll(mu)));
            return GermClass::not_ade();
    }
    return GermClass::not_ade();
}

GermClass classify_double_point_surface(const Germ& g, const MilnorOptions& opt) {
    // the suspension z^2 = f carries the same ADE label as the curve germ f
    return classify_germ(g, opt);
}

// ---------------------------------------------------------------------------
// transport rules
// ---------------------------------------------------------------------------

std::string to_string(TransportRule r) {
    switch (r) {
        case TransportRule::CyclicOnFiber: return "cyclic_on_fiber";
        case TransportRule::CyclicOffFiber: return "cyclic_off_fiber";
        case TransportRule::FiberAugment: return "fiber_augment";
        case TransportRule::SmoothPair: return "smooth_pair";
        case TransportRule::NodePlusSmooth: return "node_plus_smooth";
        case TransportRule::SingularPlusSmooth: return "singular_plus_smooth";
        case TransportRule::CrossNode: return "cross_node";
        case TransportRule::Disjoint: return "disjoint";
    }
    return "?";
}

namespace {

[[noreturn]] void shape_error(TransportRule r, const AdeType& t, const std::string& want) {
    throw Error("shape", "rule " + to_string(r) + " does not apply to " + t.label() + " (needs " + want + ")");
}

}  // namespace

SingularityCensus transport(TransportRule rule, const AdeType& input, long param) {
    SingularityCensus out;
    switch (rule) {
        case TransportRule::CyclicOnFiber: {
            if (param < 1) throw Error("parameter", "cyclic cover degree must be >= 1");
            if (input.letter != 'A' || input.index % 2 == 0)
                shape_error(rule, input, "a transversal A_{2s-1}");
            const long s = (input.index + 1) / 2;
            out.add(AdeType::A(2 * param * s - 1));
            return out;
        }
        case TransportRule::CyclicOffFiber: {
            if (param < 1) throw Error("parameter", "cyclic cover degree must be >= 1");
            out.add(input, param);
            return out;
        }
        case TransportRule::FiberAugment: {
            if (input.letter != 'A' || input.index % 2 == 0) shape_error(rule, input, "A_{2s-1}");
            const long s = (input.index + 1) / 2;
            out.add(AdeType::D(2 * s + 2));
            return out;
        }
        case TransportRule::SmoothPair: {
            if (input.letter != 'A' || input.index % 2 == 0 || input.index < 3)
                shape_error(rule, input, "A_{2n+1} with n >= 1");
            out.add(AdeType::A((input.index - 1) / 2));
            return out;
        }
        case TransportRule::NodePlusSmooth: {
            if (input.letter != 'D' || input.index % 2 != 0)
                shape_error(rule, input, "a union of type D_{2n+4}");
            const long n = (input.index - 4) / 2;
            out.add(AdeType::D(n + 3));
            return out;
        }
        case TransportRule::SingularPlusSmooth: {
            if (input.letter != 'D' || input.index < 4) shape_error(rule, input, "a union of type D_{n+3}");
            const long n = input.index - 3;
            out.add(AdeType::A(2 * n + 1));
            return out;
        }
        case TransportRule::CrossNode: {
            if (!(input.letter == 'A' && input.index == 1)) shape_error(rule, input, "a transversal A_1");
            return out;  // smooth upstairs
        }
        case TransportRule::Disjoint: {
            out.add(input, 2);
            return out;
        }
    }
    throw Error("internal", "unknown transport rule");
}

}  // namespace rhomax
