/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#ifndef MINRANK_GUARD_MINRANK_MATRIX_HH
#define MINRANK_GUARD_MINRANK_MATRIX_HH 1

#include <minrank/gf.hh>

#include <cstddef>
#include <initializer_list>
#include <random>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace minrank
{
    class MatrixError : public std::runtime_error
    {
        public:
            using std::runtime_error::runtime_error;
    };

    /**
     * Dense row-major matrix over a finite field.
     */
    class Matrix
    {
        private:
            FieldPtr _field;
            std::size_t _rows = 0, _cols = 0;
            std::vector<Element> _entries;

        public:
            Matrix(FieldPtr field, std::size_t rows, std::size_t cols);

            /// Rows of element reps, e.g. {{0, 1}, {1, 0}}.
            Matrix(FieldPtr field, std::initializer_list<std::initializer_list<unsigned>> reps);
            Matrix(FieldPtr field, const std::vector<std::vector<unsigned>> & reps);

            static auto identity(FieldPtr field, std::size_t n) -> Matrix;
            static auto diagonal(FieldPtr field, const std::vector<Element> & diag) -> Matrix;
            static auto random(FieldPtr field, std::size_t rows, std::size_t cols, std::mt19937_64 & rng) -> Matrix;
            static auto random_symmetric(FieldPtr field, std::size_t n, std::mt19937_64 & rng) -> Matrix;
            static auto random_invertible(FieldPtr field, std::size_t n, std::mt19937_64 & rng) -> Matrix;

            auto field() const -> const Field & { return *_field; }
            auto field_ptr() const -> const FieldPtr & { return _field; }
            auto rows() const -> std::size_t { return _rows; }
            auto cols() const -> std::size_t { return _cols; }
            auto is_square() const -> bool { return _rows == _cols; }

            auto operator() (std::size_t i, std::size_t j) const -> Element { return _entries[i * _cols + j]; }
            auto operator() (std::size_t i, std::size_t j) -> Element & { return _entries[i * _cols + j]; }
            auto at(std::size_t i, std::size_t j) const -> Element;

            auto entries() const -> const std::vector<Element> & { return _entries; }

            auto transpose() const -> Matrix;
            auto operator* (const Matrix & other) const -> Matrix;
            auto operator== (const Matrix & other) const -> bool;

            auto is_symmetric() const -> bool;
            auto has_zero_diagonal() const -> bool;

            /// Principal submatrix on the given (ordered) indices.
            auto principal(const std::vector<std::size_t> & indices) const -> Matrix;
            auto select_rows(const std::vector<std::size_t> & indices) const -> Matrix;
            auto column(std::size_t j) const -> std::vector<Element>;

            /// C^t * this * C
            auto congruent(const Matrix & c) const -> Matrix;

            auto to_string() const -> std::string;
    };

    auto rank(const Matrix & a) -> std::size_t;

    /// Determinant via elimination: product of pivots, one sign flip per row swap.
    auto determinant(const Matrix & a) -> Element;

    /// Solves A X = B for square invertible A. Throws MatrixError if A is singular.
    auto solve(const Matrix & a, const Matrix & b) -> Matrix;

    auto inverse(const Matrix & a) -> Matrix;

    /**
     * A congruence D = C^t B C with C invertible and D block diagonal.
     *
     * In characteristic 2, D = diag(a_1..a_s, b_1 H..b_t H, 0..0) where
     * H = [[0,1],[1,0]]. In odd characteristic every H block is split into
     * diag(2b, -2b), so D is diagonal.
     */
    struct Diagonalization
    {
        Matrix transform;                       // C
        Matrix reduced;                         // D
        std::size_t diagonal_pivots = 0;        // 1x1 blocks chosen while eliminating
        std::size_t hyperbolic_pivots = 0;      // 2x2 blocks chosen while eliminating
    };

    auto congruence_diagonalize(const Matrix & b) -> Diagonalization;

    enum class CongruenceTag
    {
        identity,
        symplectic,
        square_det,
        nonsquare_det
    };

    auto to_string(CongruenceTag) -> std::string;

    struct CongruenceClass
    {
        std::size_t order;
        CongruenceTag tag;
        CongruenceTag projective_tag;
        std::size_t representative;             // index into canonical_representatives(order)
    };

    /// Throws MatrixError for non-symmetric, singular or empty input.
    auto classify_invertible_symmetric(const Matrix & b) -> CongruenceClass;

    /// One representative per projective congruence class of invertible symmetric k x k matrices.
    auto canonical_representatives(const FieldPtr & field, std::size_t k) -> std::vector<Matrix>;

    /**
     * Normal form under congruence: C^t B C is I_k or diag(H, ..., H) in
     * characteristic 2, and I_k or diag(I_{k-1}, nu) in odd characteristic,
     * where nu is the field's smallest nonsquare.
     */
    struct Normalization
    {
        Matrix transform;
        Matrix normal_form;
    };

    auto congruence_normalize(const Matrix & b) -> Normalization;

    /// A = U^t B U with B an invertible principal submatrix of A.
    struct RankDecomposition
    {
        std::vector<std::size_t> pivots;        // B = A[pivots], ascending
        Matrix inner;                           // B
        Matrix outer;                           // U
    };

    auto rank_decomposition(const Matrix & a) -> RankDecomposition;
}

#endif
