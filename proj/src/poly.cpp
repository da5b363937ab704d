#include "rhomax/poly.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace rhomax {

namespace {
constexpr int kOrdInf = 1 << 20;
}

// ---------------------------------------------------------------------------
// Poly2
// ---------------------------------------------------------------------------

void Poly2::set(int i, int j, const Rat& c) {
    if (i < 0 || j < 0) throw Error("shape", "negative exponent");
    Mon2 m{i, j};
    if (c == 0)
        t_.erase(m);
    else
        t_[m] = c;
}

Rat Poly2::coeff(int i, int j) const {
    auto it = t_.find(Mon2{i, j});
    return it == t_.end() ? Rat(0) : it->second;
}

int Poly2::degree() const {
    int d = -1;
    for (const auto& [m, c] : t_) d = std::max(d, m.deg());
    return d;
}

int Poly2::order() const {
    int d = kOrdInf;
    for (const auto& [m, c] : t_) d = std::min(d, m.deg());
    return d;
}

Poly2 Poly2::operator+(const Poly2& o) const {
    Poly2 r = *this;
    for (const auto& [m, c] : o.t_) {
        Rat v = r.coeff(m.i, m.j) + c;
        r.set(m.i, m.j, v);
    }
    return r;
}

Poly2 Poly2::operator-() const {
    Poly2 r;
    for (const auto& [m, c] : t_) r.t_[m] = -c;
    return r;
}

Poly2 Poly2::operator-(const Poly2& o) const { return *this + (-o); }

Poly2 Poly2::operator*(const Poly2& o) const {
    Poly2 r;
    for (const auto& [m1, c1] : t_)
        for (const auto& [m2, c2] : o.t_) {
            Mon2 m{m1.i + m2.i, m1.j + m2.j};
            auto it = r.t_.find(m);
            if (it == r.t_.end())
                r.t_[m] = c1 * c2;
            else {
                it->second += c1 * c2;
                if (it->second == 0) r.t_.erase(it);
            }
        }
    return r;
}

Poly2 Poly2::scaled(const Rat& c) const {
    Poly2 r;
    if (c == 0) return r;
    for (const auto& [m, v] : t_) r.t_[m] = v * c;
    return r;
}

Poly2 Poly2::dx() const {
    Poly2 r;
    for (const auto& [m, c] : t_)
        if (m.i > 0) r.t_[Mon2{m.i - 1, m.j}] = c * m.i;
    return r;
}

Poly2 Poly2::dy() const {
    Poly2 r;
    for (const auto& [m, c] : t_)
        if (m.j > 0) r.t_[Mon2{m.i, m.j - 1}] = c * m.j;
    return r;
}

Rat Poly2::eval(const Rat& x, const Rat& y) const {
    Rat acc = 0;
    for (const auto& [m, c] : t_) {
        Rat term = c;
        for (int k = 0; k < m.i; ++k) term *= x;
        for (int k = 0; k < m.j; ++k) term *= y;
        acc += term;
    }
    return acc;
}

Poly2 Poly2::linear_subst(const Rat& a, const Rat& b, const Rat& c, const Rat& d) const {
    const Poly2 lx = Poly2::mono(1, 0, a) + Poly2::mono(0, 1, b);
    const Poly2 ly = Poly2::mono(1, 0, c) + Poly2::mono(0, 1, d);
    const int dmax = std::max(degree(), 0);
    std::vector<Poly2> px(dmax + 1), py(dmax + 1);
    px[0] = Poly2(Rat(1));
    py[0] = Poly2(Rat(1));
    for (int k = 1; k <= dmax; ++k) {
        px[k] = px[k - 1] * lx;
        py[k] = py[k - 1] * ly;
    }
    Poly2 r;
    for (const auto& [m, cf] : t_) r += (px[m.i] * py[m.j]).scaled(cf);
    return r;
}

Poly2 Poly2::truncated(int n) const {
    Poly2 r;
    for (const auto& [m, c] : t_)
        if (m.deg() < n) r.t_[m] = c;
    return r;
}

Poly2 Poly2::part(int deg) const {
    Poly2 r;
    for (const auto& [m, c] : t_)
        if (m.deg() == deg) r.t_[m] = c;
    return r;
}

Poly2 Poly2::div_y() const {
    Poly2 r;
    for (const auto& [m, c] : t_) {
        if (m.j < 1) throw Error("internal", "div_y on a polynomial not divisible by y");
        r.t_[Mon2{m.i, m.j - 1}] = c;
    }
    return r;
}

Poly2 Poly2::swap_xy() const {
    Poly2 r;
    for (const auto& [m, c] : t_) r.t_[Mon2{m.j, m.i}] = c;
    return r;
}

std::vector<Rat> Poly2::restrict_y0() const {
    std::vector<Rat> v;
    for (const auto& [m, c] : t_) {
        if (m.j != 0) continue;
        if ((int)v.size() <= m.i) v.resize(m.i + 1, Rat(0));
        v[m.i] = c;
    }
    while (!v.empty() && v.back() == 0) v.pop_back();
    return v;
}

std::string Poly2::text() const {
    if (t_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    // highest degree first reads better
    std::vector<std::pair<Mon2, Rat>> ts(t_.begin(), t_.end());
    std::sort(ts.begin(), ts.end(), [](const auto& a, const auto& b) {
        if (a.first.deg() != b.first.deg()) return a.first.deg() > b.first.deg();
        return a.first < b.first;
    });
    for (const auto& [m, c] : ts) {
        Rat a = c;
        if (first) {
            if (a < 0) { os << "-"; a = -a; }
        } else {
            os << (a < 0 ? " - " : " + ");
            if (a < 0) a = -a;
        }
        first = false;
        const bool unit = (a == 1) && (m.i + m.j > 0);
        if (!unit) os << a.get_str();
        bool star = !unit;
        if (m.i > 0) {
            if (star) os << "*";
            os << "x";
            if (m.i > 1) os << "^" << m.i;
            star = true;
        }
        if (m.j > 0) {
            if (star) os << "*";
            os << "y";
            if (m.j > 1) os << "^" << m.j;
        }
    }
    return os.str();
}

// ---------------------------------------------------------------------------
// parser
// ---------------------------------------------------------------------------

namespace {

struct Parser {
    const std::string& s;
    std::size_t pos = 0;

    explicit Parser(const std::string& text) : s(text) {}

    void skip() {
        while (pos < s.size() && std::isspace((unsigned char)s[pos])) ++pos;
    }
    bool eat(char c) {
        skip();
        if (pos < s.size() && s[pos] == c) { ++pos; return true; }
        return false;
    }
    char peek() {
        skip();
        return pos < s.size() ? s[pos] : '\0';
    }

    Int integer() {
        skip();
        std::size_t start = pos;
        while (pos < s.size() && std::isdigit((unsigned char)s[pos])) ++pos;
        if (start == pos) throw Error("parse", "expected an integer at offset " + std::to_string(start));
        return Int(s.substr(start, pos - start));
    }

    Poly2 factor() {
        char c = peek();
        Poly2 base;
        if (c == '(') {
            eat('(');
            base = expr();
            if (!eat(')')) throw Error("parse", "missing ')'");
        } else if (c == 'x' || c == 'X') {
            ++pos;
            base = Poly2::var_x();
        } else if (c == 'y' || c == 'Y') {
            ++pos;
            base = Poly2::var_y();
        } else if (std::isdigit((unsigned char)c)) {
            Int num = integer();
            if (eat('/')) {
                Int den = integer();
                if (den == 0) throw Error("parse", "zero denominator");
                Rat q(num, den);
                q.canonicalize();
                base = Poly2(q);
            } else {
                base = Poly2(Rat(num));
            }
        } else {
            throw Error("parse", "unexpected character '" + std::string(1, c) + "' at offset " + std::to_string(pos));
        }
        if (eat('^')) {
            Int e = integer();
            if (e < 0 || e > 512) throw Error("parse", "exponent out of range");
            Poly2 acc(Rat(1));
            for (Int k = 0; k < e; ++k) acc = acc * base;
            base = acc;
        }
        return base;
    }

    bool starts_factor() {
        char c = peek();
        return c == '(' || c == 'x' || c == 'X' || c == 'y' || c == 'Y' || std::isdigit((unsigned char)c);
    }

    Poly2 term() {
        Poly2 r = factor();
        for (;;) {
            if (eat('*')) {
                r = r * factor();
            } else if (starts_factor()) {
                r = r * factor();  // implicit multiplication, e.g. "2x"
            } else {
                break;
            }
        }
        return r;
    }

    Poly2 expr() {
        bool neg = false;
        if (eat('-')) neg = true;
        else eat('+');
        Poly2 r = term();
        if (neg) r = -r;
        for (;;) {
            if (eat('+')) r += term();
            else if (eat('-')) r = r - term();
            else break;
        }
        return r;
    }
};

}  // namespace

Poly2 parse_poly2(const std::string& text) {
    Parser p(text);
    Poly2 r = p.expr();
    p.skip();
    if (p.pos != text.size())
        throw Error("parse", "trailing input at offset " + std::to_string(p.pos));
    return r;
}

// ---------------------------------------------------------------------------
// univariate helpers
// ---------------------------------------------------------------------------

namespace {
void trim1(QPoly1& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}
}  // namespace

int deg1(const QPoly1& p) {
    for (int i = (int)p.size() - 1; i >= 0; --i)
        if (p[i] != 0) return i;
    return -1;
}

int ord1(const QPoly1& p) {
    for (int i = 0; i < (int)p.size(); ++i)
        if (p[i] != 0) return i;
    return kOrdInf;
}

QPoly1 derivative1(const QPoly1& p) {
    QPoly1 r;
    for (int i = 1; i < (int)p.size(); ++i) r.push_back(p[i] * i);
    trim1(r);
    return r;
}

namespace {
// remainder of a by b (b nonzero)
QPoly1 rem1(QPoly1 a, const QPoly1& b) {
    int db = deg1(b);
    if (db < 0) throw Error("internal", "division by zero polynomial");
    for (int da = deg1(a); da >= db; da = deg1(a)) {
        Rat f = a[da] / b[db];
        for (int i = 0; i <= db; ++i) a[da - db + i] -= f * b[i];
        a[da] = 0;  // guard against rounding-free but nonzero residue
        trim1(a);
        if (a.empty()) break;
    }
    return a;
}
}  // namespace

QPoly1 gcd1(QPoly1 a, QPoly1 b) {
    trim1(a);
    trim1(b);
    while (!b.empty()) {
        QPoly1 r = rem1(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    int d = deg1(a);
    if (d >= 0) {
        Rat lc = a[d];
        for (auto& c : a) c /= lc;
    }
    return a;
}

QPoly1 divexact1(const QPoly1& a, const QPoly1& b) {
    QPoly1 q;
    QPoly1 r = a;
    trim1(r);
    int db = deg1(b);
    if (db < 0) throw Error("internal", "division by zero polynomial");
    int da = deg1(r);
    if (da < db) {
        if (da < 0) return {};
        throw Error("internal", "inexact polynomial division");
    }
    q.assign(da - db + 1, Rat(0));
    while ((da = deg1(r)) >= db) {
        Rat f = r[da] / b[db];
        q[da - db] = f;
        for (int i = 0; i <= db; ++i) r[da - db + i] -= f * b[i];
        trim1(r);
    }
    if (!r.empty()) throw Error("internal", "inexact polynomial division");
    return q;
}

// ---------------------------------------------------------------------------
// bivariate gcd (primitive Euclid in y over Q[x])
// ---------------------------------------------------------------------------

namespace {

// f as polynomial in y with coefficients in Q[x]
std::vector<QPoly1> ycoeffs(const Poly2& f) {
    std::vector<QPoly1> v;
    for (const auto& [m, c] : f.terms()) {
        if ((int)v.size() <= m.j) v.resize(m.j + 1);
        if ((int)v[m.j].size() <= m.i) v[m.j].resize(m.i + 1, Rat(0));
        v[m.j][m.i] = c;
    }
    while (!v.empty() && deg1(v.back()) < 0) v.pop_back();
    return v;
}

Poly2 from_ycoeffs(const std::vector<QPoly1>& v) {
    Poly2 f;
    for (int j = 0; j < (int)v.size(); ++j)
        for (int i = 0; i < (int)v[j].size(); ++i)
            if (v[j][i] != 0) f.set(i, j, v[j][i]);
    return f;
}

QPoly1 content_y(const std::vector<QPoly1>& v) {
    QPoly1 g;
    for (const auto& c : v)
        if (deg1(c) >= 0) g = g.empty() ? c : gcd1(g, c);
    return g;
}

std::vector<QPoly1> divide_content(const std::vector<QPoly1>& v, const QPoly1& cont) {
    std::vector<QPoly1> r;
    for (const auto& c : v)
        r.push_back(deg1(c) < 0 ? QPoly1{} : divexact1(c, cont));
    return r;
}

QPoly1 mul1(const QPoly1& a, const QPoly1& b) {
    if (deg1(a) < 0 || deg1(b) < 0) return {};
    QPoly1 r(a.size() + b.size() - 1, Rat(0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    trim1(r);
    return r;
}

// pseudo-remainder of a by b in y (deg_y a >= deg_y b >= 0)
std::vector<QPoly1> prem_y(std::vector<QPoly1> a, const std::vector<QPoly1>& b) {
    const int db = (int)b.size() - 1;
    const QPoly1& lb = b.back();
    while ((int)a.size() - 1 >= db && !a.empty()) {
        const int da = (int)a.size() - 1;
        QPoly1 la = a.back();
        if (deg1(la) < 0) { a.pop_back(); continue; }
        // a <- lb * a - la * y^{da-db} * b
        std::vector<QPoly1> t(a.size());
        for (std::size_t i = 0; i < a.size(); ++i) t[i] = mul1(a[i], lb);
        for (int i = 0; i <= db; ++i) {
            QPoly1 sub = mul1(b[i], la);
            QPoly1& dst = t[da - db + i];
            if (sub.size() > dst.size()) dst.resize(sub.size(), Rat(0));
            for (std::size_t k = 0; k < sub.size(); ++k) dst[k] -= sub[k];
            trim1(dst);
        }
        t.pop_back();
        while (!t.empty() && deg1(t.back()) < 0) t.pop_back();
        a = std::move(t);
    }
    return a;
}

}  // namespace

Poly2 gcd2(Poly2 f, Poly2 g) {
    if (f.is_zero()) return g;
    if (g.is_zero()) return f;
    auto fy = ycoeffs(f);
    auto gy = ycoeffs(g);
    QPoly1 cf = content_y(fy), cg = content_y(gy);
    QPoly1 cont = gcd1(cf, cg);
    auto a = divide_content(fy, cf);
    auto b = divide_content(gy, cg);
    if (a.size() < b.size()) std::swap(a, b);
    while (!b.empty()) {
        auto r = prem_y(a, b);
        if (!r.empty()) {
            QPoly1 cr = content_y(r);
            r = divide_content(r, cr);
        }
        a = std::move(b);
        b = std::move(r);
    }
    // gcd = cont * pp(a)
    QPoly1 ca = content_y(a);
    a = divide_content(a, ca);
    std::vector<QPoly1> res(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) res[i] = mul1(a[i], cont);
    Poly2 h = from_ycoeffs(res);
    // normalize: leading (graded-lex greatest) coefficient 1
    if (!h.is_zero()) {
        Mon2 lead = h.terms().begin()->first;
        int bestd = -1;
        Rat lc;
        for (const auto& [m, c] : h.terms()) {
            if (m.deg() > bestd || (m.deg() == bestd && m > lead)) {
                bestd = m.deg();
                lead = m;
                lc = c;
            }
        }
        h = h.scaled(1 / lc);
    }
    return h;
}

// ---------------------------------------------------------------------------
// local intersection multiplicity at the origin
// ---------------------------------------------------------------------------

std::optional<Int> local_intersection_multiplicity(Poly2 f, Poly2 g) {
    if (f.is_zero() || g.is_zero())
        throw Error("precondition", "intersection multiplicity with a zero polynomial");
    if (f.at_origin() != 0 && g.at_origin() != 0) return Int(0);
    if (f.at_origin() != 0 || g.at_origin() != 0) return Int(0);
    {
        Poly2 h = gcd2(f, g);
        if (h.degree() >= 1 && h.at_origin() == 0) return std::nullopt;  // shared branch: infinite
    }
    Int total = 0;
    int guard = 0;
    for (;;) {
        if (++guard > 100000) throw Error("internal", "intersection multiplicity did not terminate");
        if (f.at_origin() != 0 || g.at_origin() != 0) return total;
        QPoly1 a = f.restrict_y0();
        QPoly1 b = g.restrict_y0();
        const int da = deg1(a), db = deg1(b);
        if (da < 0 && db < 0)
            throw Error("internal", "unreachable: y divides both factors after gcd check");
        if (da < 0) {
            // f = y * h ; I(f,g) = ord_x g(x,0) + I(h,g)
            total += ord1(b);
            f = f.div_y();
            continue;
        }
        if (db < 0) {
            total += ord1(a);
            g = g.div_y();
            continue;
        }
        if (da > db) { std::swap(f, g); continue; }
        // kill the leading x-term of g(x,0)
        Rat c = b[db] / a[da];
        Poly2 shift = Poly2::mono(db - da, 0, c);
        g = g - shift * f;
    }
}

// ---------------------------------------------------------------------------
// Poly3
// ---------------------------------------------------------------------------

void Poly3::set(int a, int b, int c, const Rat& v) {
    if (a < 0 || b < 0 || c < 0) throw Error("shape", "negative exponent");
    Mon3 m{a, b, c};
    if (v == 0)
        t_.erase(m);
    else
        t_[m] = v;
}

int Poly3::degree() const {
    int d = -1;
    for (const auto& [m, c] : t_) d = std::max(d, m.deg());
    return d;
}

bool Poly3::is_homogeneous() const {
    int d = -2;
    for (const auto& [m, c] : t_) {
        if (d == -2) d = m.deg();
        else if (m.deg() != d) return false;
    }
    return true;
}

Poly3 Poly3::operator*(const Poly3& o) const {
    Poly3 r;
    for (const auto& [m1, c1] : t_)
        for (const auto& [m2, c2] : o.t_) {
            Mon3 m{m1.a + m2.a, m1.b + m2.b, m1.c + m2.c};
            auto it = r.t_.find(m);
            if (it == r.t_.end())
                r.t_[m] = c1 * c2;
            else {
                it->second += c1 * c2;
                if (it->second == 0) r.t_.erase(it);
            }
        }
    return r;
}

Poly3 Poly3::operator+(const Poly3& o) const {
    Poly3 r = *this;
    for (const auto& [m, c] : o.t_) {
        auto it = r.t_.find(m);
        if (it == r.t_.end())
            r.t_[m] = c;
        else {
            it->second += c;
            if (it->second == 0) r.t_.erase(it);
        }
    }
    return r;
}

Poly3 Poly3::scaled(const Rat& c) const {
    Poly3 r;
    if (c == 0) return r;
    for (const auto& [m, v] : t_) r.t_[m] = v * c;
    return r;
}

Rat Poly3::eval(const std::array<Rat, 3>& p) const {
    Rat acc = 0;
    for (const auto& [m, c] : t_) {
        Rat t = c;
        for (int k = 0; k < m.a; ++k) t *= p[0];
        for (int k = 0; k < m.b; ++k) t *= p[1];
        for (int k = 0; k < m.c; ++k) t *= p[2];
        acc += t;
    }
    return acc;
}

Poly3 Poly3::partial(int var) const {
    Poly3 r;
    for (const auto& [m, c] : t_) {
        Mon3 d = m;
        int e = (var == 0 ? m.a : var == 1 ? m.b : m.c);
        if (e == 0) continue;
        if (var == 0) --d.a;
        else if (var == 1) --d.b;
        else --d.c;
        r.t_[d] = c * e;
    }
    return r;
}

Poly2 Poly3::chart(const std::array<Rat, 3>& point, const std::array<Rat, 3>& b1,
                   const std::array<Rat, 3>& b2) const {
    std::array<Poly2, 3> lin;
    for (int k = 0; k < 3; ++k) {
        Poly2 l(point[k]);
        l += Poly2::mono(1, 0, b1[k]);
        l += Poly2::mono(0, 1, b2[k]);
        lin[k] = l;
    }
    const int d = std::max(degree(), 0);
    std::array<std::vector<Poly2>, 3> pw;
    for (int k = 0; k < 3; ++k) {
        pw[k].resize(d + 1);
        pw[k][0] = Poly2(Rat(1));
        for (int e = 1; e <= d; ++e) pw[k][e] = pw[k][e - 1] * lin[k];
    }
    Poly2 r;
    for (const auto& [m, c] : t_)
        r += (pw[0][m.a] * pw[1][m.b] * pw[2][m.c]).scaled(c);
    return r;
}

std::string Poly3::text() const {
    if (t_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : t_) {
        Rat a = c;
        if (first) {
            if (a < 0) { os << "-"; a = -a; }
        } else {
            os << (a < 0 ? " - " : " + ");
            if (a < 0) a = -a;
        }
        first = false;
        const bool unit = (a == 1) && m.deg() > 0;
        if (!unit) os << a.get_str();
        bool star = !unit;
        const char* names[3] = {"X0", "X1", "X2"};
        int es[3] = {m.a, m.b, m.c};
        for (int k = 0; k < 3; ++k) {
            if (es[k] == 0) continue;
            if (star) os << "*";
            os << names[k];
            if (es[k] > 1) os << "^" << es[k];
            star = true;
        }
    }
    return os.str();
}

Poly3 line_poly(const Rat& a, const Rat& b, const Rat& c) {
    Poly3 p;
    p.set(1, 0, 0, a);
    p.set(0, 1, 0, b);
    p.set(0, 0, 1, c);
    if (p.is_zero()) throw Error("shape", "zero line");
    return p;
}

}  // namespace rhomax
