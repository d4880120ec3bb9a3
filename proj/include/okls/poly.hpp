#pragma once

// Dense univariate integer polynomials, ascending coefficient order.
// coeffs[d] is the coefficient of t^d; the zero polynomial has empty coeffs.

#include "okls/numeric.hpp"

#include <algorithm>
#include <sstream>
#include <vector>

namespace okls {

class IntPoly {
public:
    IntPoly() = default;
    explicit IntPoly(Int c)
    {
        if (c != 0) coeffs_ = {std::move(c)};
    }
    explicit IntPoly(std::vector<Int> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }
    IntPoly(std::initializer_list<Int> coeffs) : coeffs_(coeffs) { normalize(); }

    static IntPoly monomial(int degree, Int c = Int(1))
    {
        std::vector<Int> v(static_cast<size_t>(degree) + 1);
        v.back() = std::move(c);
        return IntPoly(std::move(v));
    }

    const std::vector<Int>& coeffs() const { return coeffs_; }
    bool is_zero() const { return coeffs_.empty(); }
    int degree() const { return coeffs_.empty() ? -1 : static_cast<int>(coeffs_.size()) - 1; }

    Int coeff(int d) const
    {
        if (d < 0 || d >= static_cast<int>(coeffs_.size())) return Int(0);
        return coeffs_[static_cast<size_t>(d)];
    }

    bool operator==(const IntPoly& o) const { return coeffs_ == o.coeffs_; }
    bool operator!=(const IntPoly& o) const { return !(*this == o); }

    IntPoly operator+(const IntPoly& o) const
    {
        std::vector<Int> v(std::max(coeffs_.size(), o.coeffs_.size()));
        for (size_t i = 0; i < v.size(); ++i) v[i] = coeff(static_cast<int>(i)) + o.coeff(static_cast<int>(i));
        return IntPoly(std::move(v));
    }
    IntPoly operator-() const
    {
        std::vector<Int> v(coeffs_.size());
        for (size_t i = 0; i < v.size(); ++i) v[i] = -coeffs_[i];
        return IntPoly(std::move(v));
    }
    IntPoly operator-(const IntPoly& o) const { return *this + (-o); }
    IntPoly operator*(const IntPoly& o) const
    {
        if (is_zero() || o.is_zero()) return IntPoly();
        std::vector<Int> v(coeffs_.size() + o.coeffs_.size() - 1);
        for (size_t i = 0; i < coeffs_.size(); ++i)
            for (size_t j = 0; j < o.coeffs_.size(); ++j) v[i + j] += coeffs_[i] * o.coeffs_[j];
        return IntPoly(std::move(v));
    }
    IntPoly& operator+=(const IntPoly& o) { return *this = *this + o; }
    IntPoly& operator-=(const IntPoly& o) { return *this = *this - o; }
    IntPoly& operator*=(const IntPoly& o) { return *this = *this * o; }

    Int eval(const Int& x) const
    {
        Int acc = 0;
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
        return acc;
    }

    // t^r * p(1/t); requires deg p <= r so the result is a polynomial.
    IntPoly reversed(int r) const
    {
        std::vector<Int> v(static_cast<size_t>(r) + 1);
        for (int d = 0; d <= degree(); ++d) v[static_cast<size_t>(r - d)] = coeff(d);
        return IntPoly(std::move(v));
    }

    // Keep only degrees d with 2d < r (integer comparison, no halves).
    IntPoly truncate_below_half(int r) const
    {
        std::vector<Int> v;
        for (int d = 0; d <= degree(); ++d)
            if (2 * d < r) v.push_back(coeff(d));
        return IntPoly(std::move(v));
    }

    IntPoly abs_coeffs() const
    {
        std::vector<Int> v(coeffs_.size());
        for (size_t i = 0; i < v.size(); ++i) v[i] = int_abs(coeffs_[i]);
        return IntPoly(std::move(v));
    }

    std::string str() const
    {
        if (is_zero()) return "0";
        std::ostringstream os;
        bool first = true;
        for (int d = degree(); d >= 0; --d) {
            Int c = coeff(d);
            if (c == 0) continue;
            if (!first) os << (c > 0 ? " + " : " - ");
            else if (c < 0) os << "-";
            Int a = int_abs(c);
            if (d == 0 || a != 1) os << a.str();
            if (d >= 1) os << "t";
            if (d >= 2) os << "^" << d;
            first = false;
        }
        return os.str();
    }

private:
    void normalize()
    {
        while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
    }

    std::vector<Int> coeffs_;
};

inline IntPoly operator*(const Int& c, const IntPoly& p) { return IntPoly(c) * p; }

} // namespace okls
