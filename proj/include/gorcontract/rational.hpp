#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace gorcontract {

// Exact rational arithmetic on int64 with overflow detection. Everything in
// this project is desk-scale, so a fraction of machine integers is plenty;
// we still refuse to return a silently wrapped value.
struct Rat {
    std::int64_t num = 0;
    std::int64_t den = 1;  // always > 0, gcd(num, den) == 1

    constexpr Rat() = default;
    Rat(std::int64_t n) : num(n), den(1) {}
    Rat(std::int64_t n, std::int64_t d) : num(n), den(d) { normalize(); }

    static std::int64_t checked(__int128 v) {
        if (v > INT64_MAX || v < INT64_MIN)
            throw std::overflow_error("rational overflow");
        return static_cast<std::int64_t>(v);
    }

    void normalize() {
        if (den == 0) throw std::domain_error("rational with zero denominator");
        if (den < 0) { num = -num; den = -den; }
        std::int64_t g = std::gcd(num < 0 ? -num : num, den);
        if (g > 1) { num /= g; den /= g; }
    }

    friend Rat operator+(const Rat& a, const Rat& b) {
        __int128 n = (__int128)a.num * b.den + (__int128)b.num * a.den;
        __int128 d = (__int128)a.den * b.den;
        return reduced(n, d);
    }
    friend Rat operator-(const Rat& a, const Rat& b) {
        __int128 n = (__int128)a.num * b.den - (__int128)b.num * a.den;
        __int128 d = (__int128)a.den * b.den;
        return reduced(n, d);
    }
    friend Rat operator*(const Rat& a, const Rat& b) {
        return reduced((__int128)a.num * b.num, (__int128)a.den * b.den);
    }
    friend Rat operator/(const Rat& a, const Rat& b) {
        if (b.num == 0) throw std::domain_error("rational division by zero");
        return reduced((__int128)a.num * b.den, (__int128)a.den * b.num);
    }
    Rat operator-() const { Rat r; r.num = -num; r.den = den; return r; }
    Rat& operator+=(const Rat& o) { *this = *this + o; return *this; }
    Rat& operator-=(const Rat& o) { *this = *this - o; return *this; }

    friend bool operator==(const Rat& a, const Rat& b) { return a.num == b.num && a.den == b.den; }
    friend bool operator!=(const Rat& a, const Rat& b) { return !(a == b); }
    friend bool operator<(const Rat& a, const Rat& b) {
        return (__int128)a.num * b.den < (__int128)b.num * a.den;
    }
    friend bool operator>(const Rat& a, const Rat& b) { return b < a; }
    friend bool operator<=(const Rat& a, const Rat& b) { return !(b < a); }
    friend bool operator>=(const Rat& a, const Rat& b) { return !(a < b); }

    bool is_zero() const { return num == 0; }
    bool is_integer() const { return den == 1; }

    std::string str() const {
        if (den == 1) return std::to_string(num);
        return std::to_string(num) + "/" + std::to_string(den);
    }

    // Accepts "n" or "p/q".
    static Rat parse(const std::string& s) {
        auto slash = s.find('/');
        try {
            if (slash == std::string::npos) return Rat(std::stoll(trimmed(s)));
            std::int64_t p = std::stoll(trimmed(s.substr(0, slash)));
            std::int64_t q = std::stoll(trimmed(s.substr(slash + 1)));
            return Rat(p, q);
        } catch (const std::overflow_error&) {
            throw;
        } catch (const std::domain_error&) {
            throw;
        } catch (const std::exception&) {
            throw std::invalid_argument("malformed fraction: '" + s + "'");
        }
    }

  private:
    static Rat reduced(__int128 n, __int128 d) {
        if (d < 0) { n = -n; d = -d; }
        __int128 a = n < 0 ? -n : n;
        __int128 b = d;
        while (b) { __int128 t = a % b; a = b; b = t; }
        if (a > 1) { n /= a; d /= a; }
        Rat r;
        r.num = checked(n);
        r.den = checked(d);
        if (r.den == 0) throw std::domain_error("rational with zero denominator");
        return r;
    }
    static std::string trimmed(std::string s) {
        auto issp = [](char c) { return c == ' ' || c == '\t'; };
        while (!s.empty() && issp(s.front())) s.erase(s.begin());
        while (!s.empty() && issp(s.back())) s.pop_back();
        if (s.empty()) throw std::invalid_argument("empty fraction");
        return s;
    }
};

// Half-integer stored exactly as twice its value. Slopes and vertex values of
// the conewise-linear functions in this project live here: integral on
// unramified edges and on legs, possibly strictly half-integral on ramified
// edges.
struct HalfInt {
    std::int64_t twice = 0;

    constexpr HalfInt() = default;
    static constexpr HalfInt from_twice(std::int64_t t) { HalfInt h; h.twice = t; return h; }
    static constexpr HalfInt whole(std::int64_t n) { return from_twice(2 * n); }

    bool is_integer() const { return twice % 2 == 0; }
    std::int64_t to_integer() const {
        if (!is_integer()) throw std::domain_error("half-integer " + str() + " is not integral");
        return twice / 2;
    }
    Rat to_rat() const { return Rat(twice, 2); }
    bool is_zero() const { return twice == 0; }

    friend HalfInt operator+(HalfInt a, HalfInt b) { return from_twice(Rat::checked((__int128)a.twice + b.twice)); }
    friend HalfInt operator-(HalfInt a, HalfInt b) { return from_twice(Rat::checked((__int128)a.twice - b.twice)); }
    HalfInt operator-() const { return from_twice(-twice); }
    HalfInt doubled() const { return from_twice(Rat::checked((__int128)twice * 2)); }
    friend HalfInt operator*(HalfInt a, std::int64_t k) { return from_twice(Rat::checked((__int128)a.twice * k)); }
    HalfInt& operator+=(HalfInt o) { *this = *this + o; return *this; }
    HalfInt& operator-=(HalfInt o) { *this = *this - o; return *this; }

    friend bool operator==(HalfInt a, HalfInt b) { return a.twice == b.twice; }
    friend bool operator!=(HalfInt a, HalfInt b) { return a.twice != b.twice; }
    friend bool operator<(HalfInt a, HalfInt b) { return a.twice < b.twice; }
    friend bool operator>(HalfInt a, HalfInt b) { return a.twice > b.twice; }
    friend bool operator<=(HalfInt a, HalfInt b) { return a.twice <= b.twice; }
    friend bool operator>=(HalfInt a, HalfInt b) { return a.twice >= b.twice; }

    std::string str() const {
        if (twice % 2 == 0) return std::to_string(twice / 2);
        return std::to_string(twice) + "/2";
    }

    // Accepts "n" or "m/2".
    static HalfInt parse(const std::string& s) {
        Rat r = Rat::parse(s);
        if (r.den == 1) return whole(r.num);
        if (r.den == 2) return from_twice(r.num);
        throw std::invalid_argument("'" + s + "' is not a half-integer");
    }

    static HalfInt from_rat(const Rat& r) {
        if (r.den == 1) return whole(r.num);
        if (r.den == 2) return from_twice(r.num);
        throw std::domain_error("rational " + r.str() + " is not a half-integer");
    }
};

}  // namespace gorcontract
