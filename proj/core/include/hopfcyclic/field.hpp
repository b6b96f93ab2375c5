#ifndef HOPFCYCLIC_FIELD_HPP
#define HOPFCYCLIC_FIELD_HPP

#include <cstdint>
#include <string>

#include <gmpxx.h>

#include "errors.hpp"

namespace hopfcyclic {

struct FieldSpec {
    enum class Kind { rationals, prime_field };
    Kind kind = Kind::rationals;
    std::uint64_t p = 0;
};

inline std::string field_spec_name(const FieldSpec& spec) {
    if (spec.kind == FieldSpec::Kind::rationals) return "Q";
    return "F" + std::to_string(spec.p);
}

namespace detail {

inline std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

inline std::uint64_t powmod_u64(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
    std::uint64_t r = 1 % m;
    a %= m;
    while (e) {
        if (e & 1) r = mulmod_u64(r, a, m);
        a = mulmod_u64(a, a, m);
        e >>= 1;
    }
    return r;
}

inline bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n == q) return true;
        if (n % q == 0) return false;
    }
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) { d >>= 1; ++s; }
    // deterministic witness set for 64-bit inputs
    for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        std::uint64_t x = powmod_u64(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool witness = true;
        for (int i = 0; i < s - 1; ++i) {
            x = mulmod_u64(x, x, n);
            if (x == n - 1) { witness = false; break; }
        }
        if (witness) return false;
    }
    return true;
}

inline bool looks_like_fraction(const std::string& s) {
    if (s.empty()) return false;
    std::size_t i = 0;
    if (s[i] == '+' || s[i] == '-') ++i;
    std::size_t digits = 0;
    while (i < s.size() && s[i] >= '0' && s[i] <= '9') { ++i; ++digits; }
    if (digits == 0) return false;
    if (i == s.size()) return true;
    if (s[i] != '/') return false;
    ++i;
    if (i < s.size() && (s[i] == '+' || s[i] == '-')) ++i;
    digits = 0;
    while (i < s.size() && s[i] >= '0' && s[i] <= '9') { ++i; ++digits; }
    return digits > 0 && i == s.size();
}

} // namespace detail

class Rationals {
public:
    using Value = mpq_class;

    Value zero() const { return Value(0); }
    Value one() const { return Value(1); }
    Value from_long(long n) const { return Value(n); }

    Value add(const Value& a, const Value& b) const { return a + b; }
    Value sub(const Value& a, const Value& b) const { return a - b; }
    Value mul(const Value& a, const Value& b) const { return a * b; }
    Value neg(const Value& a) const { return -a; }

    Value inv(const Value& a) const {
        if (a == 0) throw ConfigurationError("division by zero in Q");
        return Value(1) / a;
    }
    Value div(const Value& a, const Value& b) const { return mul(a, inv(b)); }

    bool is_zero(const Value& a) const { return a == 0; }
    bool eq(const Value& a, const Value& b) const { return a == b; }

    Value parse(const std::string& s) const {
        if (!detail::looks_like_fraction(s)) throw FormatError("bad rational literal: '" + s + "'");
        mpq_class q;
        if (q.set_str(s, 10) != 0) throw FormatError("bad rational literal: '" + s + "'");
        if (q.get_den() == 0) throw FormatError("zero denominator: '" + s + "'");
        q.canonicalize();
        return q;
    }

    std::string show(const Value& a) const { return a.get_str(); }

    FieldSpec spec() const { return FieldSpec{FieldSpec::Kind::rationals, 0}; }
    bool operator==(const Rationals&) const { return true; }
};

class PrimeField {
public:
    using Value = std::uint64_t;

    explicit PrimeField(std::uint64_t p) : p_(p) {
        if (p < 2 || p >= (1ull << 61) || !detail::is_prime_u64(p))
            throw ConfigurationError("modulus must be a prime below 2^61, got " + std::to_string(p));
    }

    std::uint64_t modulus() const { return p_; }

    Value zero() const { return 0; }
    Value one() const { return 1 % p_; }
    Value from_long(long n) const {
        long r = n % static_cast<long>(p_);
        if (r < 0) r += static_cast<long>(p_);
        return static_cast<Value>(r);
    }

    Value add(Value a, Value b) const { Value s = a + b; return s >= p_ ? s - p_ : s; }
    Value sub(Value a, Value b) const { return a >= b ? a - b : a + p_ - b; }
    Value mul(Value a, Value b) const { return detail::mulmod_u64(a, b, p_); }
    Value neg(Value a) const { return a == 0 ? 0 : p_ - a; }

    Value inv(Value a) const {
        if (a == 0) throw ConfigurationError("division by zero in F" + std::to_string(p_));
        std::int64_t t = 0, nt = 1;
        std::int64_t r = static_cast<std::int64_t>(p_), nr = static_cast<std::int64_t>(a);
        while (nr != 0) {
            std::int64_t q = r / nr;
            std::int64_t tmp = t - q * nt; t = nt; nt = tmp;
            tmp = r - q * nr; r = nr; nr = tmp;
        }
        if (t < 0) t += static_cast<std::int64_t>(p_);
        return static_cast<Value>(t);
    }
    Value div(Value a, Value b) const { return mul(a, inv(b)); }

    bool is_zero(Value a) const { return a == 0; }
    bool eq(Value a, Value b) const { return a == b; }

    // Accepts integer or fraction literals; fractions reduce via modular inverse.
    Value parse(const std::string& s) const {
        if (!detail::looks_like_fraction(s)) throw FormatError("bad field literal: '" + s + "'");
        auto slash = s.find('/');
        auto parse_int = [&](const std::string& t) -> Value {
            mpz_class z(t, 10);
            mpz_class m = z % static_cast<unsigned long>(p_);
            if (m < 0) m += static_cast<unsigned long>(p_);
            return static_cast<Value>(m.get_ui());
        };
        if (slash == std::string::npos) return parse_int(s);
        Value num = parse_int(s.substr(0, slash));
        Value den = parse_int(s.substr(slash + 1));
        if (den == 0) throw FormatError("denominator divisible by p: '" + s + "'");
        return div(num, den);
    }

    std::string show(Value a) const { return std::to_string(a); }

    FieldSpec spec() const { return FieldSpec{FieldSpec::Kind::prime_field, p_}; }
    bool operator==(const PrimeField& other) const { return p_ == other.p_; }

private:
    std::uint64_t p_;
};

} // namespace hopfcyclic

#endif
