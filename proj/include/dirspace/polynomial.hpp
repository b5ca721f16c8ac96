#pragma once

#include <complex>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "dirspace/primes.hpp"

namespace dirspace {

using Complex = std::complex<double>;

// Finite Dirichlet polynomial sum_{n<=N} a_n n^{-s}, coefficients stored
// densely; slot n-1 holds a_n. Coefficients beyond N are zero by convention.
class DirichletPolynomial {
public:
    DirichletPolynomial() : coeffs_(1, Complex(0.0)) {}
    explicit DirichletPolynomial(std::uint32_t N) : coeffs_(N, Complex(0.0)) {}
    explicit DirichletPolynomial(std::vector<Complex> coeffs) : coeffs_(std::move(coeffs)) {}

    // e_n = n^{-s} truncated at N (N defaults to n).
    static DirichletPolynomial basis(std::uint32_t n, std::uint32_t N = 0);

    std::uint32_t length() const { return static_cast<std::uint32_t>(coeffs_.size()); }
    Complex coeff(std::uint32_t n) const {
        return (n >= 1 && n <= length()) ? coeffs_[n - 1] : Complex(0.0);
    }
    void set_coeff(std::uint32_t n, Complex v);
    const std::vector<Complex>& coeffs() const { return coeffs_; }
    std::vector<Complex>& coeffs() { return coeffs_; }

    Complex value_at_infinity() const { return coeff(1); }

    // Indices of the nonzero coefficients, increasing.
    std::vector<std::uint32_t> support() const;
    // Largest prime index needed to factorize every support index (0 for
    // constants).
    std::uint32_t required_prime_count() const;

private:
    std::vector<Complex> coeffs_;
};

// Bohr lift of a Dirichlet polynomial: a polynomial in the prime coordinates.
struct MultiPolynomial {
    std::map<Exponents, Complex> terms;

    MultiPolynomial multiply(const MultiPolynomial& o) const;
};

// Truncated point of the polytorus or polydisk: coordinates indexed by primes.
struct Character {
    std::vector<Complex> coords; // chi_1 .. chi_K at p_1 .. p_K

    std::uint32_t K() const { return static_cast<std::uint32_t>(coords.size()); }
    Character conjugate() const;
};

Complex evaluate(const DirichletPolynomial& f, Complex s);
DirichletPolynomial translate(const DirichletPolynomial& f, double sigma);
DirichletPolynomial derivative(const DirichletPolynomial& f);
DirichletPolynomial multiply(const DirichletPolynomial& f, const DirichletPolynomial& g,
                             std::uint64_t N_out);
MultiPolynomial bohr_lift(const DirichletPolynomial& f);
DirichletPolynomial bohr_drop(const MultiPolynomial& mp);
DirichletPolynomial twist(const DirichletPolynomial& f, const Character& chi);

// Evaluate the lift at explicit prime coordinates (used by the substitution
// oracle; throws if coords do not cover the support).
Complex evaluate_multi(const MultiPolynomial& mp, const std::vector<Complex>& coords);

// Per-polynomial structure for evaluating the lift at many characters: one
// complex multiply per index via the smallest-prime-factor recursion.
class LiftEvaluator {
public:
    explicit LiftEvaluator(const DirichletPolynomial& f);

    std::uint32_t required_K() const { return required_K_; }

    // chi(n) for all n <= N into `chi` (size N+1), given prime coordinates z.
    void character_values(const std::vector<Complex>& z, std::vector<Complex>& chi) const;

    // sum_n a_n chi(n).
    Complex value(const std::vector<Complex>& chi) const;

    // sum_n a_n n^{-sigma} chi(n) given precomputed scale[n] = n^{-sigma}.
    Complex value_scaled(const std::vector<Complex>& chi, const std::vector<double>& scale) const;

    const std::vector<std::uint32_t>& support() const { return support_; }
    std::uint32_t N() const { return N_; }

private:
    std::uint32_t N_ = 1;
    std::uint32_t required_K_ = 0;
    std::vector<std::uint32_t> support_;
    std::vector<Complex> support_coeffs_;
    std::vector<std::uint32_t> parent_;     // n / spf(n)
    std::vector<std::uint32_t> prime_slot_; // 0-based index of spf(n) in the prime list
};

// JSON form {"N": int, "coeffs": [[n, re, im], ...]} with 17 significant
// digits; only nonzero coefficients are listed.
std::string to_json(const DirichletPolynomial& f);
DirichletPolynomial polynomial_from_json(const std::string& text);

} // namespace dirspace
