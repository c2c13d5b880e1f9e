#pragma once

#include "lovelab/big_rational.hpp"

#include <string>
#include <vector>

namespace lovelab::conjectures {

// k-th entry (s_k - s_{k+1}) / k, k from 1
std::vector<BigRational> t_transform(const std::vector<BigRational>& seq);

// 1, 2, ..., length
std::vector<BigRational> naturals(int length);

// Rows N, T[N], ..., T^{rows-1}[N], starting from `length` naturals.
std::vector<std::vector<BigRational>> t_table(int rows, int length);

// First entry of T^n[N] from seed_length naturals; needs seed_length >= n + 1.
BigRational tn_first(int n, int seed_length = 0);

struct ConjectureReport {
  std::string name;
  double computed;
  double target;
  double abs_error;
  double digits;  // matched significant digits, capped at 15
  double threshold;
  bool passed;
  std::string method;
};

inline constexpr double default_digits_threshold = 8.0;

ConjectureReport make_report(std::string name, double computed, double target, std::string method,
                             double threshold = default_digits_threshold);

// X grid of the log-tail fits.
std::vector<double> default_fit_grid();
double fit_gamma0(const std::vector<double>& Xs);
double fit_gamma1(const std::vector<double>& Xs);

ConjectureReport verify_gamma0();
ConjectureReport verify_gamma1();

struct Gamma2Report {
  ConjectureReport integral4;
  ConjectureReport via_integral4;  // route (a)
  ConjectureReport direct;         // route (b)
  double route_gap;
};
Gamma2Report verify_gamma2();

ConjectureReport verify_polylog_claim(int n);

ConjectureReport residue_identity(int k, double tol = 1e-12);

// Names accepted by run_named: gamma0, gamma1, gamma2, gamma2_direct,
// integral4, polylog1..polylog6, residue1..residue8, and the groups
// polylog, residue, all.
std::vector<std::string> known_names();
bool is_known_name(const std::string& which);
// Concurrent evaluation, results in the fixed order of known_names().
std::vector<ConjectureReport> run_named(const std::string& which, double tol = 1e-12);

}  // namespace lovelab::conjectures
