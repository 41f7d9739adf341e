#pragma once

/**
 * Closed-form incidence/Laplacian pseudoinverses, resistance matrices,
 * Kirchhoff indices, and spanning-tree counts for the three families,
 * expressed through the a/s recurrence values.
 *
 * Every matrix is labeled in the canonical order of graph.hpp, so results
 * can be compared entrywise against the elimination-based oracle.
 */

#include "laddermat/graph.hpp"
#include "laddermat/matrix.hpp"

namespace laddermat {

enum class MatrixKind { QPlus, LPlus, Resistance };

std::string matrix_kind_token(MatrixKind kind);
MatrixKind parse_matrix_kind(const std::string& token);

struct ClosedFormResult {
    FamilySpec spec;
    MatrixKind kind;
    RationalMatrix matrix;
};

/**
 * The three blocks of the ladder pseudoinverse
 *
 *       ( B  -B )
 *   H = ( C   D )
 *       ( D   C )
 *
 * with B the symmetric n x n spoke block and C, D the (n-1) x n rail blocks.
 */
struct LadderBlocks {
    RationalMatrix b;
    RationalMatrix c;
    RationalMatrix d;

    static LadderBlocks make(int n);
};

/// (3n-2) x 2n pseudoinverse of the ladder incidence matrix (rows f, e+, e-).
ClosedFormResult ladder_qplus(int n);

/// 3n x 2n pseudoinverse for the circular ladder (rows e+, e-, f).
ClosedFormResult cl_qplus(int n);

/// 3n x 2n pseudoinverse for the Mobius ladder (rows e1..e2n, f1..fn).
ClosedFormResult mobius_qplus(int n);

/// Family dispatch over the three q-plus constructors.
ClosedFormResult qplus(const FamilySpec& spec);

/**
 * 2n x 2n Laplacian pseudoinverse. Circular and Mobius ladders use their
 * entrywise closed forms (additive constant (n - 1/n)/24); the ladder value
 * is assembled as H^T H.
 */
ClosedFormResult lplus(const FamilySpec& spec);

ClosedFormResult ladder_resistance(int n);
ClosedFormResult cl_resistance(int n);
ClosedFormResult mobius_resistance(int n);

/// Family dispatch over the three resistance constructors.
ClosedFormResult resistance(const FamilySpec& spec);

/// Exact Kirchhoff index (half the grand sum of the resistance matrix).
BigRational kirchhoff_index(const FamilySpec& spec);

/// Spanning-tree count of the family member.
BigInt tree_count(const FamilySpec& spec);

/**
 * Spanning-tree count after contracting spoke f_i; spoke_index must lie in
 * [1, n]. Independent of the index for the circular families.
 */
BigInt contracted_tree_count(const FamilySpec& spec, int spoke_index);

} // namespace laddermat
