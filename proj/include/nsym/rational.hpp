#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <functional>
#include <string>

namespace nsym {

using Rat = mpq_class;

inline Rat rat(long num, long den = 1) {
    Rat r(num, den);
    r.canonicalize();
    return r;
}

inline std::size_t hash_combine(std::size_t a, std::size_t b) {
    return a ^ (b + 0x9e3779b97f4a7c15ULL + (a << 6) + (a >> 2));
}

inline std::size_t hash_rat(const Rat& q) {
    // cheap residue hash; collisions only cost a deep compare
    std::size_t hn = mpz_fdiv_ui(q.get_num().get_mpz_t(), 2305843009213693951ULL);
    std::size_t hd = mpz_fdiv_ui(q.get_den().get_mpz_t(), 2305843009213693951ULL);
    if (sgn(q) < 0) hn = ~hn;
    return hash_combine(hn, hd);
}

/// Exact complex number with rational real and imaginary parts.
struct GQ {
    Rat re, im;

    GQ() : re(0), im(0) {}
    GQ(long n) : re(n), im(0) {}
    GQ(const Rat& r) : re(r), im(0) {}
    GQ(Rat r, Rat i) : re(std::move(r)), im(std::move(i)) {}

    static GQ make_i() { return GQ(Rat(0), Rat(1)); }

    bool is_zero() const { return sgn(re) == 0 && sgn(im) == 0; }
    bool is_one() const { return re == 1 && sgn(im) == 0; }
    bool is_real() const { return sgn(im) == 0; }
    bool is_integer() const {
        return is_real() && mpz_cmp_ui(re.get_den().get_mpz_t(), 1) == 0;
    }

    GQ operator-() const { return GQ(Rat(-re), Rat(-im)); }
    GQ conj() const { return GQ(re, Rat(-im)); }

    GQ operator+(const GQ& o) const { return GQ(Rat(re + o.re), Rat(im + o.im)); }
    GQ operator-(const GQ& o) const { return GQ(Rat(re - o.re), Rat(im - o.im)); }
    GQ operator*(const GQ& o) const {
        return GQ(Rat(re * o.re - im * o.im), Rat(re * o.im + im * o.re));
    }
    GQ inv() const {
        Rat n = re * re + im * im;  // nonzero for nonzero value
        return GQ(Rat(re / n), Rat(-im / n));
    }
    GQ operator/(const GQ& o) const { return *this * o.inv(); }

    GQ pow(long e) const {
        if (e == 0) return GQ(1);
        GQ base = e < 0 ? inv() : *this;
        unsigned long n = e < 0 ? -(unsigned long)e : (unsigned long)e;
        GQ acc(1);
        while (n) {
            if (n & 1) acc = acc * base;
            base = base * base;
            n >>= 1;
        }
        return acc;
    }

    bool operator==(const GQ& o) const { return re == o.re && im == o.im; }
    bool operator!=(const GQ& o) const { return !(*this == o); }

    // lexicographic (re, im); total order used for canonical sorting only
    int cmp(const GQ& o) const {
        int c = ::cmp(re, o.re);
        if (c) return c;
        return ::cmp(im, o.im);
    }

    std::size_t hash() const { return hash_combine(hash_rat(re), hash_rat(im)); }
};

inline GQ operator*(long a, const GQ& b) { return GQ(a) * b; }

std::string rat_to_string(const Rat& q);
std::string gq_to_string(const GQ& v);

}  // namespace nsym
