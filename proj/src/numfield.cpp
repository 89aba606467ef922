#include "hml/numfield.hpp"

#include <sstream>

#include "hml/error.hpp"
#include "hml/linalg.hpp"

namespace hml {

FieldPtr NumberField::rationals() {
    static FieldPtr q = [] {
        auto* f = new NumberField();
        f->var_ = "";
        f->degree_ = 1;
        return FieldPtr(f);
    }();
    return q;
}

FieldPtr NumberField::extend(const FieldPtr& base, std::vector<NFElem> low, std::string var) {
    if (low.empty()) throw std::invalid_argument("extend: empty minimal polynomial");
    auto* f = new NumberField();
    f->base_ = base;
    for (auto& c : low) c = c.lift_to(base);
    f->minpoly_ = std::move(low);
    f->var_ = std::move(var);
    f->degree_ = base->degree() * static_cast<int>(f->minpoly_.size());
    return FieldPtr(f);
}

FieldPtr NumberField::simple(const QPoly& monic, std::string var) {
    if (monic.empty() || monic.back() != 1) throw std::invalid_argument("simple: polynomial must be monic");
    std::vector<NFElem> low;
    for (size_t i = 0; i + 1 < monic.size(); ++i) low.push_back(NFElem::rational(rationals(), monic[i]));
    return extend(rationals(), std::move(low), std::move(var));
}

bool NumberField::contains(const NumberField* other) const {
    for (const NumberField* f = this; f; f = f->base_.get())
        if (f == other) return true;
    // all towers contain Q
    return other->is_rationals();
}

QPoly NumberField::absolute_minpoly_simple() const {
    if (!base_ || !base_->is_rationals()) throw std::logic_error("absolute_minpoly_simple: not a simple extension of Q");
    QPoly r;
    for (const auto& c : minpoly_) r.push_back(c.rational_value());
    r.push_back(1);
    return r;
}

std::vector<mpq_class> NumberField::mul_raw(const std::vector<mpq_class>& a, const std::vector<mpq_class>& b) const {
    if (!base_) return {a[0] * b[0]};
    const int nb = base_->degree(), d = rel_degree();
    auto block_zero = [&](const std::vector<mpq_class>& v, int i) {
        for (int t = 0; t < nb; ++t)
            if (v[i * nb + t] != 0) return false;
        return true;
    };
    std::vector<std::vector<mpq_class>> prod(2 * d - 1, std::vector<mpq_class>(nb));
    std::vector<mpq_class> ai(nb), bj(nb);
    for (int i = 0; i < d; ++i) {
        if (block_zero(a, i)) continue;
        std::copy(a.begin() + i * nb, a.begin() + (i + 1) * nb, ai.begin());
        for (int j = 0; j < d; ++j) {
            if (block_zero(b, j)) continue;
            std::copy(b.begin() + j * nb, b.begin() + (j + 1) * nb, bj.begin());
            auto t = base_->mul_raw(ai, bj);
            for (int s = 0; s < nb; ++s) prod[i + j][s] += t[s];
        }
    }
    for (int t = 2 * d - 2; t >= d; --t) {
        bool zero = true;
        for (const auto& c : prod[t])
            if (c != 0) { zero = false; break; }
        if (zero) continue;
        for (int j = 0; j < d; ++j) {
            auto m = base_->mul_raw(prod[t], minpoly_[j].coords());
            for (int s = 0; s < nb; ++s) prod[t - d + j][s] -= m[s];
        }
    }
    std::vector<mpq_class> out(degree_);
    for (int i = 0; i < d; ++i)
        for (int s = 0; s < nb; ++s) out[i * nb + s] = prod[i][s];
    return out;
}

FieldPtr common_field(const FieldPtr& a, const FieldPtr& b) {
    if (a == b) return a;
    if (a->contains(b.get())) return a;
    if (b->contains(a.get())) return b;
    throw FieldMismatch("elements live in unrelated towers");
}

NFElem::NFElem() : F_(NumberField::rationals()), c_(1) {}
NFElem::NFElem(FieldPtr F) : F_(std::move(F)), c_(F_->degree()) {}
NFElem::NFElem(FieldPtr F, std::vector<mpq_class> coords) : F_(std::move(F)), c_(std::move(coords)) {
    if (static_cast<int>(c_.size()) != F_->degree()) throw std::invalid_argument("NFElem: wrong coordinate count");
}

NFElem NFElem::rational(FieldPtr F, const mpq_class& q) {
    NFElem r(std::move(F));
    r.c_[0] = q;
    return r;
}

NFElem NFElem::generator(FieldPtr F) {
    if (F->is_rationals()) throw std::invalid_argument("generator of Q");
    NFElem r(F);
    if (F->rel_degree() == 1) {
        // degenerate linear extension: x = -c_0
        return (-F->minpoly()[0]).lift_to(F);
    }
    r.c_[F->base()->degree()] = 1;
    return r;
}

bool NFElem::is_zero() const {
    for (const auto& c : c_)
        if (c != 0) return false;
    return true;
}

bool NFElem::is_rational() const {
    for (size_t i = 1; i < c_.size(); ++i)
        if (c_[i] != 0) return false;
    return true;
}

mpq_class NFElem::rational_value() const {
    if (!is_rational()) throw std::logic_error("rational_value: element is not rational");
    return c_[0];
}

NFElem NFElem::operator-() const {
    NFElem r(*this);
    for (auto& c : r.c_) c = -c;
    return r;
}

NFElem NFElem::lift_to(const FieldPtr& target) const {
    if (target == F_) return *this;
    if (!target->contains(F_.get())) throw FieldMismatch("lift_to: target does not contain source field");
    if (F_->is_rationals() && target->is_rationals()) return NFElem(target, c_);
    NFElem inner = lift_to(target->base());
    NFElem r(target);
    std::copy(inner.c_.begin(), inner.c_.end(), r.c_.begin());
    return r;
}

NFElem& NFElem::operator+=(const NFElem& o) {
    if (o.F_ != F_) {
        auto F = common_field(F_, o.F_);
        *this = lift_to(F);
        return *this += o.lift_to(F);
    }
    for (size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
    return *this;
}

NFElem& NFElem::operator-=(const NFElem& o) {
    if (o.F_ != F_) {
        auto F = common_field(F_, o.F_);
        *this = lift_to(F);
        return *this -= o.lift_to(F);
    }
    for (size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
    return *this;
}

NFElem& NFElem::operator*=(const NFElem& o) {
    if (o.F_ != F_) {
        auto F = common_field(F_, o.F_);
        *this = lift_to(F);
        return *this *= o.lift_to(F);
    }
    if (o.is_rational()) return *this *= o.c_[0];
    if (is_rational()) {
        mpq_class q = c_[0];
        *this = o;
        return *this *= q;
    }
    c_ = F_->mul_raw(c_, o.c_);
    return *this;
}

NFElem& NFElem::operator*=(const mpq_class& q) {
    for (auto& c : c_) c *= q;
    return *this;
}

NFElem NFElem::inv() const {
    if (is_rational()) {
        if (c_[0] == 0) throw NotInvertible("zero");
        return rational(F_, 1 / c_[0]);
    }
    // solve (mult-by-this) x = 1 over Q
    const int n = F_->degree();
    RatMatrix M(n, std::vector<mpq_class>(n));
    std::vector<mpq_class> e(n);
    for (int j = 0; j < n; ++j) {
        std::fill(e.begin(), e.end(), 0);
        e[j] = 1;
        auto col = F_->mul_raw(c_, e);
        for (int i = 0; i < n; ++i) M[i][j] = col[i];
    }
    std::vector<mpq_class> rhs(n);
    rhs[0] = 1;
    std::vector<mpq_class> x;
    if (!solve_rational(M, rhs, x)) throw NotInvertible("zero divisor in " + std::to_string(n) + "-dimensional algebra");
    return NFElem(F_, std::move(x));
}

NFElem NFElem::pow(unsigned e) const {
    NFElem r = rational(F_, 1), b = *this;
    while (e) {
        if (e & 1) r *= b;
        b *= b;
        e >>= 1;
    }
    return r;
}

std::string NFElem::str() const {
    std::ostringstream os;
    os << "[";
    for (size_t i = 0; i < c_.size(); ++i) os << (i ? "," : "") << c_[i].get_str();
    os << "]";
    return os.str();
}

NFElem operator+(NFElem a, const NFElem& b) { return a += b; }
NFElem operator-(NFElem a, const NFElem& b) { return a -= b; }
NFElem operator*(NFElem a, const NFElem& b) { return a *= b; }
NFElem operator*(NFElem a, const mpq_class& q) { return a *= q; }
NFElem operator*(const mpq_class& q, NFElem a) { return a *= q; }

bool operator==(const NFElem& a, const NFElem& b) {
    if (a.field() == b.field()) return a.coords() == b.coords();
    auto F = common_field(a.field(), b.field());
    return a.lift_to(F).coords() == b.lift_to(F).coords();
}

} // namespace hml
