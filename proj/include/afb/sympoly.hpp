/**
 * @file sympoly.hpp
 * @brief Multivariate Laurent polynomials over the rationals in a fixed set of
 *        named formal parameters (t_1, ..., s_1, s_2, fiber coordinates).
 *
 * Used as a coefficient ring for LaurentPoly so that whole-family
 * computations can be run once symbolically, and as the algebra in which the
 * torus-action and axis-identity checks are verified exactly.
 */
#pragma once

#include "rational.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace afb {

// Shared, immutable list of symbol names. All SymPoly values participating in
// one computation must be built over the same table.
class SymbolTable {
public:
    explicit SymbolTable(std::vector<std::string> names) : names_(std::move(names)) {}

    size_t size() const { return names_.size(); }
    const std::string& name(size_t i) const { return names_[i]; }

    size_t index(const std::string& name) const
    {
        for (size_t i = 0; i < names_.size(); ++i)
            if (names_[i] == name)
                return i;
        throw std::invalid_argument("SymbolTable: unknown symbol '" + name + "'");
    }

    friend bool operator==(const SymbolTable& a, const SymbolTable& b)
    {
        return a.names_ == b.names_;
    }

private:
    std::vector<std::string> names_;
};

using SymbolTablePtr = std::shared_ptr<const SymbolTable>;

inline SymbolTablePtr make_symbols(std::vector<std::string> names)
{
    return std::make_shared<const SymbolTable>(std::move(names));
}

class SymPoly {
public:
    using exponent_vec = std::vector<int>; // one slot per symbol, negatives allowed

    SymPoly() = default;
    explicit SymPoly(SymbolTablePtr table) : table_(std::move(table)) {}

    static SymPoly constant(const Rational& c, SymbolTablePtr table)
    {
        SymPoly p(std::move(table));
        if (!is_zero(c))
            p.terms_.emplace(exponent_vec(p.table_->size(), 0), c);
        return p;
    }

    static SymPoly symbol(const std::string& name, SymbolTablePtr table, int power = 1)
    {
        SymPoly p(std::move(table));
        exponent_vec e(p.table_->size(), 0);
        e[p.table_->index(name)] = power;
        p.terms_.emplace(std::move(e), Rational(1));
        return p;
    }

    // Required by the LaurentPoly coefficient concept. A default-constructed
    // SymPoly is the zero of every table.
    static SymPoly from_int(long n)
    {
        SymPoly p;
        if (n != 0)
            p.int_value_ = Rational(n);
        return p;
    }

    static SymPoly from_rational(const Rational& c)
    {
        SymPoly p;
        p.int_value_ = c;
        return p;
    }

    bool is_zero_poly() const { return terms_.empty() && is_zero(int_value_); }

    bool is_rational_constant() const
    {
        if (terms_.empty())
            return true;
        if (terms_.size() != 1)
            return false;
        for (int e : terms_.begin()->first)
            if (e != 0)
                return false;
        return true;
    }

    Rational rational_constant() const
    {
        if (!is_rational_constant())
            throw std::domain_error("SymPoly::rational_constant: not a constant");
        if (terms_.empty())
            return int_value_;
        return terms_.begin()->second + int_value_;
    }

    const SymbolTablePtr& table() const { return table_; }

    friend SymPoly operator-(const SymPoly& a)
    {
        SymPoly r = a;
        r.int_value_ = -r.int_value_;
        for (auto& [e, c] : r.terms_)
            c = -c;
        return r;
    }

    friend SymPoly operator+(const SymPoly& a, const SymPoly& b)
    {
        SymPoly r = a.promote_with(b);
        const SymPoly bb = b.promote_with(a);
        for (const auto& [e, c] : bb.terms_) {
            auto [it, inserted] = r.terms_.emplace(e, c);
            if (!inserted) {
                it->second += c;
                if (is_zero(it->second))
                    r.terms_.erase(it);
            }
        }
        r.int_value_ += bb.int_value_;
        return r;
    }

    friend SymPoly operator-(const SymPoly& a, const SymPoly& b) { return a + (-b); }

    friend SymPoly operator*(const SymPoly& a, const SymPoly& b)
    {
        const SymPoly aa = a.promote_with(b);
        const SymPoly bb = b.promote_with(a);
        if (!aa.table_ || !bb.table_) { // both are table-free constants
            SymPoly r;
            r.int_value_ = aa.int_value_ * bb.int_value_;
            return r;
        }
        SymPoly r(aa.table_);
        for (const auto& [ea, ca] : aa.terms_)
            for (const auto& [eb, cb] : bb.terms_) {
                exponent_vec e(ea.size());
                for (size_t i = 0; i < e.size(); ++i)
                    e[i] = ea[i] + eb[i];
                auto [it, inserted] = r.terms_.emplace(std::move(e), ca * cb);
                if (!inserted) {
                    it->second += ca * cb;
                    if (is_zero(it->second))
                        r.terms_.erase(it);
                }
            }
        return r;
    }

    friend bool operator==(const SymPoly& a, const SymPoly& b)
    {
        const SymPoly aa = a.promote_with(b);
        const SymPoly bb = b.promote_with(a);
        return aa.terms_ == bb.terms_ && aa.int_value_ == bb.int_value_;
    }

    friend bool operator!=(const SymPoly& a, const SymPoly& b) { return !(a == b); }

    std::string str() const
    {
        if (is_zero_poly())
            return "0";
        std::ostringstream os;
        bool first = true;
        if (!is_zero(int_value_)) {
            os << to_string(int_value_);
            first = false;
        }
        for (const auto& [e, c] : terms_) {
            if (!first)
                os << " + ";
            first = false;
            os << to_string(c);
            for (size_t i = 0; i < e.size(); ++i)
                if (e[i] != 0)
                    os << "*" << table_->name(i) << "^" << e[i];
        }
        return os.str();
    }

private:
    // Table-free constants (from from_int / default construction) are merged
    // into a table the first time they meet a table-carrying value.
    SymPoly promote_with(const SymPoly& other) const
    {
        if (table_ || !other.table_)
            return check_tables(other);
        SymPoly r(other.table_);
        if (!is_zero(int_value_))
            r.terms_.emplace(exponent_vec(other.table_->size(), 0), int_value_);
        return r;
    }

    SymPoly check_tables(const SymPoly& other) const
    {
        if (table_ && other.table_ && !(*table_ == *other.table_))
            throw std::invalid_argument("SymPoly: mixed symbol tables");
        SymPoly r = *this;
        if (!is_zero(r.int_value_) && r.table_) {
            auto [it, inserted] =
                r.terms_.emplace(exponent_vec(r.table_->size(), 0), r.int_value_);
            if (!inserted)
                it->second += r.int_value_;
            if (it != r.terms_.end() && is_zero(it->second))
                r.terms_.erase(it);
            r.int_value_ = 0;
        }
        return r;
    }

    SymbolTablePtr table_;
    std::map<exponent_vec, Rational> terms_;
    Rational int_value_ = 0; // constant part while no table is attached
};

} // namespace afb
