// Copyright 2026 The qfluct Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef QFLUCT_THEORY_H
#define QFLUCT_THEORY_H

#include <Eigen/Dense>
#include <Eigen/Sparse>
#include <array>
#include <complex>
#include <string>
#include <string_view>
#include <vector>

namespace qfluct {

/// Ensemble mean of Tr rho_AB^2 over random Clifford states (exact, any N).
double mean_purity_exact(int n, int n_ab);

/// Leading-order E[(Tr rho_AB^2)^2] at N_AB = N/2: (4 + (3/4)^n_t) 2^-N.
double fourth_moment_prediction(int n, int n_t);

/// (3/4)^n_t.
double tilde_delta_prediction(int n_t);

/// D = 2^N E[(Tr rho_AB^2)^2] - 4, the quantity whose mean should decay as (3/4)^n_t.
double decay_statistic(int n, double mean_squared_purity);

struct Prediction {
    std::string name;
    int n = 0;
    int n_ab = 0;
    int n_t = 0;
    double value = 0;
};

/// Permutation of t tensor copies. image[k] = pi(k), 0-based.
class Permutation {
   public:
    static Permutation identity(int t);
    /// Cycle notation with 1-based points: "e", "(12)", "(12)(34)", "(234)".
    static Permutation parse(std::string_view cycles, int t);
    static std::vector<Permutation> all(int t);

    int size() const {
        return int(image_.size());
    }
    int operator()(int k) const {
        return image_[size_t(k)];
    }
    /// (a * b)(k) = a(b(k)).
    Permutation operator*(const Permutation &other) const;
    Permutation inverse() const;
    int num_cycles() const;
    std::string str() const;
    bool operator==(const Permutation &other) const = default;

   private:
    std::vector<int> image_;
};

using SparseC = Eigen::SparseMatrix<std::complex<double>>;

struct PermutationOperator {
    int t = 0;
    int n = 0;
    std::string label;
    SparseC matrix;
};

/// Largest t*n accepted by the brute-force constructions (4096 x 4096).
inline constexpr int kMaxPermutationBits = 12;

/// r_pi on one site: sum_x |x_pi(1) ... x_pi(t)><x| in big-endian copy order.
SparseC site_permutation(const Permutation &pi);

/// The 16 x 16 operator (1/2)(I^4 + X^4 + Y^4 + Z^4), built from Pauli Kronecker products.
Eigen::MatrixXcd pi4_site();

/// Pi_4 = pi4^{(x) n}, site-major copy layout.
SparseC pi4_operator(int n);

/// Labels of the six extra Clifford commutant elements.
inline const std::array<std::string, 6> kHatS3Labels = {"pi4", "pi4.(23)", "pi4.(34)", "pi4.(24)", "pi4.(234)", "pi4.(324)"};

/// Accepts plain cycle notation or "pi4.<cycles>" / "pi4" (t = 4 only).
/// Layout: bit (site s, copy c) is the (s*t + c)-th most significant bit.
PermutationOperator build_permutation_operator(std::string_view label, int t, int n);

/// Tr(A^dag B) for sparse operators.
std::complex<double> hs_inner(const SparseC &a, const SparseC &b);

std::complex<double> trace(const SparseC &a);

/// <R_pi | R_pi'> over all t! permutations (Permutation::all order).
Eigen::MatrixXd permutation_gram(int t, int n);

/// 6 x 6 matrix Tr((R_pi Pi4)^dag T4 (R_pi' Pi4) T4^dag) over kHatS3Labels,
/// T applied to qubit 0 of each copy. n in {1, 2}.
Eigen::MatrixXcd lemma1_matrix(int n);

}  // namespace qfluct

#endif
