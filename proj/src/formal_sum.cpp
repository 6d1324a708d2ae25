#include "mzv/formal_sum.hpp"

#include <sstream>

#include "mzv/errors.hpp"

namespace mzv {

FormalSum FormalSum::term(const Index& k, long long c) {
    FormalSum s;
    s.add_term(k, c);
    return s;
}

void FormalSum::add_term(const Index& k, long long c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(k, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

long long FormalSum::total_coefficient() const {
    long long s = 0;
    for (const auto& [k, c] : terms_) s += c;
    return s;
}

FormalSum& FormalSum::operator+=(const FormalSum& rhs) {
    for (const auto& [k, c] : rhs.terms_) add_term(k, c);
    return *this;
}

FormalSum& FormalSum::operator-=(const FormalSum& rhs) {
    for (const auto& [k, c] : rhs.terms_) add_term(k, -c);
    return *this;
}

FormalSum FormalSum::scaled(long long c) const {
    FormalSum out;
    if (c == 0) return out;
    for (const auto& [k, coef] : terms_) out.terms_.emplace(k, coef * c);
    return out;
}

std::string FormalSum::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, c] : terms_) {
        long long a = c;
        if (first) {
            if (a < 0) { os << "-"; a = -a; }
        } else {
            os << (a < 0 ? " - " : " + ");
            if (a < 0) a = -a;
        }
        if (a != 1) os << a << "*";
        os << "(" << format_index(k) << ")";
        first = false;
    }
    return os.str();
}

namespace {

// Lift a product on indices to a bilinear product on formal sums.
template <typename F>
FormalSum bilinear(const FormalSum& a, const FormalSum& b, F&& prod) {
    FormalSum out;
    for (const auto& [ka, ca] : a.terms())
        for (const auto& [kb, cb] : b.terms())
            out += prod(ka, kb).scaled(ca * cb);
    return out;
}

}  // namespace

FormalSum harmonic(const Index& k, const Index& l) {
    if (k.empty()) return FormalSum::term(l);
    if (l.empty()) return FormalSum::term(k);
    const Index kt = k.tail(), lt = l.tail();
    FormalSum out;
    const FormalSum a = harmonic(kt, l), b = harmonic(k, lt), c3 = harmonic(kt, lt);
    for (const auto& [m, c] : a.terms()) out.add_term(with_prefix(k.front(), m), c);
    for (const auto& [m, c] : b.terms()) out.add_term(with_prefix(l.front(), m), c);
    for (const auto& [m, c] : c3.terms()) out.add_term(with_prefix(k.front() + l.front(), m), c);
    return out;
}

FormalSum harmonic(const FormalSum& a, const FormalSum& b) {
    return bilinear(a, b, [](const Index& k, const Index& l) { return harmonic(k, l); });
}

FormalSum circled_harmonic(const Index& k, const Index& l) {
    if (k.empty() || l.empty()) throw EmptyIndex("circled harmonic product needs non-empty indices");
    FormalSum out;
    const FormalSum inner = harmonic(k.tail(), l.tail());
    for (const auto& [m, c] : inner.terms())
        out.add_term(with_prefix(k.front() + l.front(), m), c);
    return out;
}

FormalSum circled_harmonic(const FormalSum& a, const FormalSum& b) {
    return bilinear(a, b, [](const Index& k, const Index& l) { return circled_harmonic(k, l); });
}

FormalSum star_expand(const Index& k) {
    if (k.empty()) throw EmptyIndex("star expansion of empty index");
    const int r = k.depth();
    FormalSum out;
    for (uint32_t mask = 0; mask < (1u << (r - 1)); ++mask) {
        std::vector<int> parts{k.parts().front()};
        for (int i = 1; i < r; ++i) {
            if (mask & (1u << (i - 1)))
                parts.back() += k.parts()[static_cast<size_t>(i)];  // "+"
            else
                parts.push_back(k.parts()[static_cast<size_t>(i)]);  // ","
        }
        out.add_term(Index(std::move(parts)), 1);
    }
    return out;
}

FormalSum naive_shuffle(const Index& k, const Index& l) {
    if (k.empty()) return FormalSum::term(l);
    if (l.empty()) return FormalSum::term(k);
    FormalSum out;
    const FormalSum a = naive_shuffle(k.tail(), l), b = naive_shuffle(k, l.tail());
    for (const auto& [m, c] : a.terms()) out.add_term(with_prefix(k.front(), m), c);
    for (const auto& [m, c] : b.terms()) out.add_term(with_prefix(l.front(), m), c);
    return out;
}

FormalSum zeta_plus_sum(const FormalSum& s) {
    FormalSum out;
    for (const auto& [k, c] : s.terms()) out.add_term(zeta_plus(k), c);
    return out;
}

}  // namespace mzv
