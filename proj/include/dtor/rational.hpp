#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace dtor {

using Z = mpz_class;
using Q = mpq_class;

using QVec = std::vector<Q>;
using ZVec = std::vector<Z>;

Q qpow(const Q& base, long e);
Z zpow(long base, unsigned long e);
Q qpow_int(long base, long e);

Z floor_q(const Q& x);
Z ceil_q(const Q& x);

// Parses "a", "-a", "a/b"; throws std::invalid_argument on garbage.
Q parse_rational(const std::string& s);
QVec parse_rational_list(const std::string& s, char sep = ',');

std::string to_string(const Q& x);
std::string to_string(const Z& x);
std::string join(const QVec& v, const std::string& sep = ",");

// Smallest h >= 0 with x <= base^(h*r) * s; x may be <= 0 (then 0).
long ceil_log_ratio(const Q& x, const Q& s, long base, long r);

Z gcd_vec(const ZVec& v);
ZVec primitive(const ZVec& v);
ZVec primitive(const QVec& v);
QVec to_q(const ZVec& v);

}  // namespace dtor
