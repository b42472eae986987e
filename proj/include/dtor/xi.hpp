#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "dtor/cone.hpp"
#include "dtor/fan.hpp"
#include "dtor/linalg.hpp"

namespace dtor {

// Points of C_d are vectors of length d-1. "Plain" coordinates are s_i;
// "power" coordinates are s_i^r with r the stratum of s.

// 1-based index of the first nonzero coordinate, or size+1 for the zero vector.
int stratum(const QVec& v);
QVec plain_to_powers(const QVec& s);
bool in_chamber(const QVec& v);  // 0 <= v_1 <= ... <= v_{d-1}

// xi^d_k: power coordinates in, plain coordinates out.
QVec xi_eval(long q, int k, const QVec& powers);
// inverse of xi_eval: plain in, power coordinates out
QVec xi_inverse(long q, int k, const QVec& plain);
// xi_{k'} o xi_k^{-1}, plain to plain
QVec xi_transfer(long q, int k, int kp, const QVec& plain);

// theta(i), 1-based, decided on the rays of sigma (plain coordinates).
std::vector<int> theta(long q, int k, const Cone& sigma);
// pi_{k,sigma}: power coordinates in
QVec pi_eval(long q, const std::vector<int>& th, const QVec& powers);
// image cone of sigma, as the cone over the images of its rays
Cone pi_image(long q, int k, const Cone& sigma);
Cone xi_image(long q, int k, const Cone& sigma);

// The two-term comparisons cutting out the fan: index 0 is s_1 itself,
// the rest are q^h s_j - s_i for 1 <= j < i <= d-1, 0 <= h <= k-1.
struct Comparison {
    int h, i, j;  // h < 0 marks s_1
};
std::vector<Comparison> comparisons(int d, int k);
// sign of each comparison at a point given in power coordinates
std::vector<int> comparison_signs(long q, const std::vector<Comparison>& cs, const QVec& powers);

struct SourceFan {
    long q = 2;
    int d = 2, k = 1;
    Fan fan;
    std::vector<Comparison> comps;
    std::vector<std::vector<int>> signs;  // per cone of fan, at a relative interior point
    // membership of a power-coordinate point in cone idx, via the signs
    bool contains_powers(size_t idx, const QVec& powers) const;
};
SourceFan sigma_upper(long q, int d, int k);

// sigma ranging over a source fan, paired with its image
struct ImageFan {
    long q = 2;
    int d = 2, k = 1, kp = 1;
    std::vector<Cone> source, image;
    Fan fan;
};
// Sigma_k: images xi_k(sigma), sigma in Sigma^(k)
ImageFan sigma_k(long q, int d, int k);
// Sigma_{k,k'}: images xi_k(sigma'), sigma' in Sigma^(k')
ImageFan sigma_kk(long q, int d, int k, int kp);

struct Linearization {
    QMat l;  // (d-1) x (d-1)
    bool certified = false;
    std::string detail;  // first failing check
};
// l with xi_{k'} = l o pi_{k,sigma} on sigma
Linearization linearize_xi(long q, int k, int kp, const Cone& sigma, std::uint64_t seed);
// M with xi_{k'} = M o xi_k on xi_k(sigma), sigma in Sigma^(k') (k <= k')
Linearization linearize_transfer(long q, int k, int kp, const Cone& sigma, std::uint64_t seed);

// positive integer combinations of the rays, deterministic in seed
std::vector<QVec> interior_samples(const Cone& c, int count, std::uint64_t seed);

}  // namespace dtor
