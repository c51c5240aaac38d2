#include "qcap/tlaurent.hpp"

#include <sstream>
#include <stdexcept>

namespace qcap {

namespace {
const BigInt kZero = 0;
}

TLaurent TLaurent::constant(BigInt c) {
    return term(std::move(c), 0);
}

TLaurent TLaurent::term(BigInt coeff, int t_exp) {
    TLaurent f;
    if (coeff != 0) f.terms_.emplace(t_exp, std::move(coeff));
    return f;
}

const BigInt& TLaurent::coeff(int t_exp) const {
    auto it = terms_.find(t_exp);
    return it == terms_.end() ? kZero : it->second;
}

int TLaurent::min_exp() const {
    if (terms_.empty()) throw std::logic_error("min_exp of zero polynomial");
    return terms_.begin()->first;
}

int TLaurent::max_exp() const {
    if (terms_.empty()) throw std::logic_error("max_exp of zero polynomial");
    return terms_.rbegin()->first;
}

bool TLaurent::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == 0);
}

bool TLaurent::is_unit_monomial() const {
    if (terms_.size() != 1) return false;
    const BigInt& c = terms_.begin()->second;
    return c == 1 || c == -1;
}

void TLaurent::add_term(int t_exp, const BigInt& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(t_exp, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

TLaurent& TLaurent::operator+=(const TLaurent& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

TLaurent& TLaurent::operator-=(const TLaurent& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

TLaurent TLaurent::operator-() const {
    TLaurent r;
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
}

TLaurent& TLaurent::operator*=(const BigInt& c) {
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, v] : terms_) v *= c;
    return *this;
}

TLaurent operator*(const TLaurent& a, const TLaurent& b) {
    TLaurent r;
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_) r.add_term(ea + eb, ca * cb);
    return r;
}

TLaurent TLaurent::shifted(int dt) const {
    TLaurent r;
    for (const auto& [e, c] : terms_) r.terms_.emplace(e + dt, c);
    return r;
}

BigInt TLaurent::at_t1() const {
    BigInt s = 0;
    for (const auto& [e, c] : terms_) s += c;
    return s;
}

std::string TLaurent::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << c;
        if (e != 0) os << "*t^" << e;
    }
    return os.str();
}

} // namespace qcap
