#include "permpat/series.hpp"

#include <algorithm>
#include <stdexcept>

namespace permpat {

Series::Series(int order, std::vector<Rational> coeffs) : order_(order), c_(std::move(coeffs)) {
    if (static_cast<int>(c_.size()) != order + 1)
        throw std::invalid_argument("Series: coefficient count does not match order");
}

Series Series::constant(const Rational& v, int order) {
    Series s(order);
    s.c_[0] = v;
    return s;
}

Series Series::x(int order) { return monomial(Rational(1), 1, order); }

Series Series::monomial(const Rational& c, int k, int order) {
    Series s(order);
    if (k <= order) s.c_[k] = c;
    return s;
}

int Series::valuation() const {
    for (int i = 0; i <= order_; ++i)
        if (!c_[i].is_zero()) return i;
    return order_ + 1;
}

const Rational& Series::coeff(int n) const {
    if (n < 0 || n > order_)
        throw std::out_of_range("Series::coeff: index beyond certified order");
    return c_[n];
}

Series Series::truncated(int new_order) const {
    if (new_order > order_)
        throw std::out_of_range("Series::truncated: cannot extend certified order");
    Series s(new_order);
    for (int i = 0; i <= new_order; ++i) s.c_[i] = c_[i];
    return s;
}

bool Series::is_zero() const {
    return std::all_of(c_.begin(), c_.end(), [](const Rational& r) { return r.is_zero(); });
}

std::string Series::to_string() const {
    std::string out;
    bool first = true;
    for (int i = 0; i <= order_; ++i) {
        if (c_[i].is_zero()) continue;
        if (!first) out += " + ";
        out += c_[i].to_string() + "*x^" + std::to_string(i);
        first = false;
    }
    if (first) out = "0";
    return out + " + O(x^" + std::to_string(order_ + 1) + ")";
}

static int common_order(const Series& a, const Series& b) {
    return std::min(a.order(), b.order());
}

Series operator+(const Series& a, const Series& b) {
    int n = common_order(a, b);
    Series r(n);
    for (int i = 0; i <= n; ++i) r.coeff(i) = a.coeff(i) + b.coeff(i);
    return r;
}

Series operator-(const Series& a, const Series& b) {
    int n = common_order(a, b);
    Series r(n);
    for (int i = 0; i <= n; ++i) r.coeff(i) = a.coeff(i) - b.coeff(i);
    return r;
}

Series operator-(const Series& a) {
    Series r(a.order());
    for (int i = 0; i <= a.order(); ++i) r.coeff(i) = -a.coeff(i);
    return r;
}

Series operator*(const Series& a, const Series& b) {
    int n = common_order(a, b);
    Series r(n);
    for (int i = 0; i <= n; ++i) {
        if (a.coeff(i).is_zero()) continue;
        for (int j = 0; i + j <= n; ++j) {
            if (b.coeff(j).is_zero()) continue;
            r.coeff(i + j) += a.coeff(i) * b.coeff(j);
        }
    }
    return r;
}

Series operator*(const Rational& s, const Series& a) {
    Series r(a.order());
    for (int i = 0; i <= a.order(); ++i) r.coeff(i) = s * a.coeff(i);
    return r;
}

Series operator/(const Series& a, const Series& b) {
    int n = common_order(a, b);
    int vb = b.valuation();
    if (vb > n)
        throw std::domain_error("Series division by zero series");
    if (vb > 0) {
        int va = a.valuation();
        if (va < vb)
            throw std::domain_error("Series division: divisor valuation exceeds dividend valuation");
        return ps_shift(a, -vb).truncated(n - vb) / ps_shift(b, -vb).truncated(n - vb);
    }
    Series r(n);
    Rational inv_b0 = Rational(1) / b.coeff(0);
    for (int i = 0; i <= n; ++i) {
        Rational acc = a.coeff(i);
        for (int j = 1; j <= i; ++j) {
            if (b.coeff(j).is_zero() || r.coeff(i - j).is_zero()) continue;
            acc -= b.coeff(j) * r.coeff(i - j);
        }
        r.coeff(i) = acc * inv_b0;
    }
    return r;
}

bool operator==(const Series& a, const Series& b) {
    int n = common_order(a, b);
    for (int i = 0; i <= n; ++i)
        if (!(a.coeff(i) == b.coeff(i))) return false;
    return true;
}

Series ps_add(const Series& a, const Series& b) { return a + b; }
Series ps_mul(const Series& a, const Series& b) { return a * b; }
Series ps_div(const Series& a, const Series& b) { return a / b; }

Series ps_sqrt(const Series& a) {
    int n = a.order();
    int v = a.valuation();
    if (v > n) return Series::zero(n);  // sqrt(0)
    if (v % 2 != 0)
        throw std::domain_error("Series sqrt: odd valuation");
    if (v > 0)
        return ps_shift(ps_sqrt(ps_shift(a, -v).truncated(n - v)), v / 2).truncated(n - v / 2);
    if (!(a.coeff(0) == Rational(1)))
        throw std::domain_error("Series sqrt: constant term must be 1");
    // c_k from c_0 = 1 and a_k = sum_{i+j=k} c_i c_j
    Series r(n);
    r.coeff(0) = Rational(1);
    Rational half(1, 2);
    for (int k = 1; k <= n; ++k) {
        Rational acc = a.coeff(k);
        for (int i = 1; i < k; ++i) acc -= r.coeff(i) * r.coeff(k - i);
        r.coeff(k) = half * acc;
    }
    return r;
}

Series ps_compose(const Series& f, const Series& g) {
    int n = std::min(f.order(), g.order());
    if (g.valuation() < 1 && !g.is_zero())
        throw std::domain_error("Series compose: inner series needs valuation >= 1");
    // Horner from the top coefficient down
    Series gt = g.truncated(n);
    Series r = Series::constant(f.coeff(n), n);
    for (int k = n - 1; k >= 0; --k) {
        r = r * gt;
        r.coeff(0) += f.coeff(k);
    }
    return r;
}

Series ps_derivative(const Series& a) {
    if (a.order() < 1) return Series::zero(0);
    Series r(a.order() - 1);
    for (int i = 1; i <= a.order(); ++i) r.coeff(i - 1) = Rational(i) * a.coeff(i);
    return r;
}

Series ps_shift(const Series& a, int k) {
    if (k >= 0) {
        Series r(a.order() + k);
        for (int i = 0; i <= a.order(); ++i) r.coeff(i + k) = a.coeff(i);
        return r;
    }
    int s = -k;
    if (a.valuation() < s)
        throw std::domain_error("Series shift: not divisible by x^" + std::to_string(s));
    Series r(a.order() - s);
    for (int i = s; i <= a.order(); ++i) r.coeff(i - s) = a.coeff(i);
    return r;
}

Series ps_pow(const Series& a, unsigned e) {
    Series r = Series::constant(Rational(1), a.order());
    Series b = a;
    while (e) {
        if (e & 1) r = r * b;
        if (e >>= 1) b = b * b;
    }
    return r;
}

bool agree_to_order(const Series& a, const Series& b, int order) {
    if (a.order() < order || b.order() < order) return false;
    for (int i = 0; i <= order; ++i)
        if (!(a.coeff(i) == b.coeff(i))) return false;
    return true;
}

// ---------------------------------------------------------------- UPoly

void UPoly::trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

UPoly UPoly::var() { return monomial(Rational(1), 1); }

UPoly UPoly::monomial(const Rational& c, int k) {
    UPoly p;
    if (c.is_zero()) return p;
    p.c_.assign(k + 1, Rational(0));
    p.c_[k] = c;
    return p;
}

Rational UPoly::coeff(int k) const {
    if (k < 0 || k >= static_cast<int>(c_.size())) return Rational(0);
    return c_[k];
}

UPoly UPoly::operator+(const UPoly& o) const {
    UPoly r;
    r.c_.resize(std::max(c_.size(), o.c_.size()));
    for (size_t i = 0; i < r.c_.size(); ++i) {
        if (i < c_.size()) r.c_[i] += c_[i];
        if (i < o.c_.size()) r.c_[i] += o.c_[i];
    }
    r.trim();
    return r;
}

UPoly UPoly::operator-(const UPoly& o) const {
    UPoly r;
    r.c_.resize(std::max(c_.size(), o.c_.size()));
    for (size_t i = 0; i < r.c_.size(); ++i) {
        if (i < c_.size()) r.c_[i] += c_[i];
        if (i < o.c_.size()) r.c_[i] -= o.c_[i];
    }
    r.trim();
    return r;
}

UPoly UPoly::operator*(const UPoly& o) const {
    UPoly r;
    if (c_.empty() || o.c_.empty()) return r;
    r.c_.assign(c_.size() + o.c_.size() - 1, Rational(0));
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i].is_zero()) continue;
        for (size_t j = 0; j < o.c_.size(); ++j)
            if (!o.c_[j].is_zero()) r.c_[i + j] += c_[i] * o.c_[j];
    }
    r.trim();
    return r;
}

Rational UPoly::eval(const Rational& u) const {
    Rational r(0);
    for (size_t i = c_.size(); i-- > 0;) r = r * u + c_[i];
    return r;
}

UPoly UPoly::derivative() const {
    UPoly r;
    if (c_.size() <= 1) return r;
    r.c_.resize(c_.size() - 1);
    for (size_t i = 1; i < c_.size(); ++i) r.c_[i - 1] = Rational(static_cast<long long>(i)) * c_[i];
    r.trim();
    return r;
}

UPoly UPoly::reversed(int n) const {
    if (degree() > n)
        throw std::invalid_argument("UPoly::reversed: degree exceeds window");
    UPoly r;
    r.c_.assign(n + 1, Rational(0));
    for (int k = 0; k < static_cast<int>(c_.size()); ++k) r.c_[n - k] = c_[k];
    r.trim();
    return r;
}

std::string UPoly::to_string() const {
    if (c_.empty()) return "0";
    std::string out;
    for (int k = static_cast<int>(c_.size()) - 1; k >= 0; --k) {
        if (c_[k].is_zero()) continue;
        if (!out.empty()) out += " + ";
        if (k == 0) { out += c_[k].to_string(); continue; }
        std::string coef = c_[k].to_string();
        if (coef != "1") out += coef + "*";
        out += "u";
        if (k > 1) out += "^" + std::to_string(k);
    }
    return out;
}

// ------------------------------------------------------------ PolySeries

PolySeries PolySeries::constant(const UPoly& p, int order) {
    PolySeries s(order);
    s.c_[0] = p;
    return s;
}

PolySeries PolySeries::z(int order) {
    PolySeries s(order);
    if (order >= 1) s.c_[1] = UPoly(Rational(1));
    return s;
}

PolySeries PolySeries::operator+(const PolySeries& o) const {
    int n = std::min(order_, o.order_);
    PolySeries r(n);
    for (int i = 0; i <= n; ++i) r.c_[i] = c_[i] + o.c_[i];
    return r;
}

PolySeries PolySeries::operator-(const PolySeries& o) const {
    int n = std::min(order_, o.order_);
    PolySeries r(n);
    for (int i = 0; i <= n; ++i) r.c_[i] = c_[i] - o.c_[i];
    return r;
}

PolySeries PolySeries::operator*(const PolySeries& o) const {
    int n = std::min(order_, o.order_);
    PolySeries r(n);
    for (int i = 0; i <= n; ++i) {
        if (c_[i].is_zero()) continue;
        for (int j = 0; i + j <= n; ++j) {
            if (o.c_[j].is_zero()) continue;
            r.c_[i + j] = r.c_[i + j] + c_[i] * o.c_[j];
        }
    }
    return r;
}

PolySeries PolySeries::operator/(const PolySeries& o) const {
    int n = std::min(order_, o.order_);
    const UPoly& b0 = o.c_[0];
    if (b0.degree() != 0)
        throw std::domain_error("PolySeries division: leading coefficient must be a nonzero constant");
    Rational inv = Rational(1) / b0.coeff(0);
    PolySeries r(n);
    for (int i = 0; i <= n; ++i) {
        UPoly acc = c_[i];
        for (int j = 1; j <= i; ++j) acc = acc - o.c_[j] * r.c_[i - j];
        r.c_[i] = acc * UPoly(inv);
    }
    return r;
}

Series PolySeries::at_u(const Rational& u) const {
    Series s(order_);
    for (int i = 0; i <= order_; ++i) s.coeff(i) = c_[i].eval(u);
    return s;
}

PolySeries PolySeries::d_du() const {
    PolySeries r(order_);
    for (int i = 0; i <= order_; ++i) r.c_[i] = c_[i].derivative();
    return r;
}

// ---------------------------------------------------------------- Bivar

Bivar::Bivar(int total_degree) : deg_(total_degree) {
    c_.resize(deg_ + 1);
    for (int i = 0; i <= deg_; ++i) c_[i].assign(deg_ - i + 1, Rational(0));
}

Bivar Bivar::constant(const Rational& r, int d) {
    Bivar b(d);
    b.c_[0][0] = r;
    return b;
}

Bivar Bivar::u(int d) {
    Bivar b(d);
    if (d >= 1) b.c_[1][0] = Rational(1);
    return b;
}

Bivar Bivar::v(int d) {
    Bivar b(d);
    if (d >= 1) b.c_[0][1] = Rational(1);
    return b;
}

const Rational& Bivar::coeff(int i, int j) const { return c_[i][j]; }
Rational& Bivar::coeff(int i, int j) { return c_[i][j]; }

Bivar Bivar::operator+(const Bivar& o) const {
    int d = std::min(deg_, o.deg_);
    Bivar r(d);
    for (int i = 0; i <= d; ++i)
        for (int j = 0; i + j <= d; ++j) r.c_[i][j] = c_[i][j] + o.c_[i][j];
    return r;
}

Bivar Bivar::operator-(const Bivar& o) const {
    int d = std::min(deg_, o.deg_);
    Bivar r(d);
    for (int i = 0; i <= d; ++i)
        for (int j = 0; i + j <= d; ++j) r.c_[i][j] = c_[i][j] - o.c_[i][j];
    return r;
}

Bivar Bivar::operator*(const Bivar& o) const {
    int d = std::min(deg_, o.deg_);
    Bivar r(d);
    for (int i = 0; i <= d; ++i)
        for (int j = 0; i + j <= d; ++j) {
            if (c_[i][j].is_zero()) continue;
            for (int k = 0; i + j + k <= d; ++k)
                for (int l = 0; i + j + k + l <= d; ++l) {
                    if (o.c_[k][l].is_zero()) continue;
                    r.c_[i + k][j + l] += c_[i][j] * o.c_[k][l];
                }
        }
    return r;
}

Bivar Bivar::operator/(const Bivar& o) const {
    int d = std::min(deg_, o.deg_);
    if (o.c_[0][0].is_zero())
        throw std::domain_error("Bivar division: zero constant term");
    Rational inv = Rational(1) / o.c_[0][0];
    Bivar r(d);
    // solve degree by degree: r_t = (a_t - sum_{s<t} b_{t-s} r_s) / b_0
    for (int t = 0; t <= d; ++t)
        for (int i = 0; i <= t; ++i) {
            int j = t - i;
            Rational acc = (i <= deg_ && j <= deg_ - i) ? c_[i][j] : Rational(0);
            for (int p = 0; p <= i; ++p)
                for (int q = 0; q <= j; ++q) {
                    if (p + q == 0) continue;  // b_0 * r_t handled separately
                    acc -= o.c_[p][q] * r.c_[i - p][j - q];
                }
            r.c_[i][j] = acc * inv;
        }
    return r;
}

Bivar bv_sqrt(const Bivar& a) {
    if (!(a.c_[0][0] == Rational(1)))
        throw std::domain_error("Bivar sqrt: constant term must be 1");
    int d = a.deg_;
    Bivar r(d);
    r.c_[0][0] = Rational(1);
    Rational half(1, 2);
    // a_t = sum r_s r_{t-s}; isolate 2 r_0 r_t
    for (int t = 1; t <= d; ++t)
        for (int i = 0; i <= t; ++i) {
            int j = t - i;
            Rational acc = a.c_[i][j];
            for (int p = 0; p <= i; ++p)
                for (int q = 0; q <= j; ++q) {
                    if ((p == 0 && q == 0) || (p == i && q == j)) continue;
                    acc -= r.c_[p][q] * r.c_[i - p][j - q];
                }
            r.c_[i][j] = half * acc;
        }
    return r;
}

Series Bivar::substitute(const Series& su, const Series& sv, int order) const {
    std::vector<Series> up(deg_ + 1), vp(deg_ + 1);
    up[0] = Series::constant(Rational(1), order);
    vp[0] = up[0];
    for (int i = 1; i <= deg_; ++i) {
        up[i] = up[i - 1] * su.truncated(order);
        vp[i] = vp[i - 1] * sv.truncated(order);
    }
    Series out = Series::zero(order);
    for (int i = 0; i <= deg_; ++i)
        for (int j = 0; i + j <= deg_; ++j) {
            if (c_[i][j].is_zero()) continue;
            out = out + c_[i][j] * (up[i] * vp[j]);
        }
    return out;
}

std::string Bivar::to_string() const {
    std::string out;
    for (int t = 0; t <= deg_; ++t)
        for (int i = 0; i <= t; ++i) {
            int j = t - i;
            if (c_[i][j].is_zero()) continue;
            if (!out.empty()) out += " + ";
            out += c_[i][j].to_string() + "*u^" + std::to_string(i) + "*v^" + std::to_string(j);
        }
    return out.empty() ? "0" : out;
}

} // namespace permpat
