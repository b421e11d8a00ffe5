#pragma once

// Binary Hermitian lattices presented as orthogonal sums of unary blocks <d>
// and formal 2x2 blocks [[a, g], [conj(g), c]] for a component A v with A a
// nonprincipal ideal written on two generators (alpha v, beta v).

#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "hermu/matrix.hpp"
#include "hermu/ring.hpp"

namespace hermu {

struct Unary {
    Int d;
};

struct FormalPair {
    Int a;
    QuadInt gamma;
    Int c;
};

using Block = std::variant<Unary, FormalPair>;

/// Number of formal generators contributed by a block (1 or 2).
std::size_t generator_count(const Block& b);

struct HermLattice {
    FieldContext ctx;
    std::vector<Block> blocks;
    std::string label;

    /// E-rank: one per block.
    std::size_t rank() const noexcept { return blocks.size(); }
    /// Length of the formal Gram matrix.
    std::size_t generator_count() const;
    bool is_free() const;
};

/// Checks integrality, positivity and the singularity of every formal block.
/// Throws NotPositiveDefinite, FormalBlockNotSingular, NonIntegralLattice or
/// ContextMismatch.
void validate(const HermLattice& lattice);

using HermMatrix = std::vector<std::vector<QuadInt>>;

/// Block-diagonal formal Gram matrix (singular whenever a FormalPair is present).
HermMatrix formal_gram(const HermLattice& lattice);

/// H(x) = sum_ij x_i M_ij conj(x_j) for O-coefficients x over the formal
/// generators. The result is a rational integer.
Int hermitian_value(const HermLattice& lattice, std::span<const QuadInt> coeffs);

/// Matrix of multiplication by w on the Z-coordinates of block `index`
/// (columns are images of the two Z-basis vectors). For a unary block the
/// basis is (v, w v); for a formal block it is the pair of formal generators
/// (u1, u2), and the action is recovered from the ratio u2/u1 = conj(g)/a.
/// Throws NonIntegralLattice if (u1, u2) is not closed under w.
IntMatrix omega_action(const HermLattice& lattice, std::size_t index);

/// Z-coordinates in the transfer basis of the element with the given
/// O-coefficients over the formal generators.
IntVec to_transfer_coords(const HermLattice& lattice, std::span<const QuadInt> coeffs);

/// O-coefficients of the element with the given transfer-basis coordinates.
std::vector<QuadInt> from_transfer_coords(const HermLattice& lattice, std::span<const Int> coords);

/// A self-map of the lattice with H(phi(v)) = lambda * H(v).
struct LatticeMap {
    enum class Kind { DiagonalSwap, Multiplication };

    Kind kind;
    Int lambda;
    /// multiplier for Kind::Multiplication; the c of <1, c> for DiagonalSwap
    QuadInt multiplier;
    Int swap_scale = 1;
    /// The same map on transfer coordinates.
    IntMatrix transfer_substitution;
    std::string description;

    /// Applies the map to O-coefficients over the formal generators.
    std::vector<QuadInt> apply(std::span<const QuadInt> coeffs) const;
};

/// (x, y) -> (c y, x) on <1, c>; scale c. Throws NotDiagonal otherwise.
LatticeMap diagonal_scaling_map(const HermLattice& lattice);

/// Multiplication by sqrt(-m) on every coordinate; scale m.
LatticeMap sqrtm_scaling_map(const HermLattice& lattice);

// --- catalog --------------------------------------------------------------

/// Parses the catalog text format. One record per line:
///   m=<int>; blocks=<block>,<block>...; label=<text>
///   <block> := U(<d>) | F(<a>; <g_a>,<g_b>; <c>)     gamma = g_a + g_b w
/// Blank lines and lines starting with '#' are ignored.
std::vector<HermLattice> parse_catalog(std::string_view text);
std::vector<HermLattice> load_catalog(const std::string& path);

/// Serializes one record in the catalog grammar.
std::string to_catalog_record(const HermLattice& lattice);
/// "U(1),F(2; 0,1; 3)"
std::string blocks_to_string(const std::vector<Block>& blocks);

/// The built-in table of universal binary Hermitian lattices (25 entries).
const std::vector<HermLattice>& catalog();
std::string_view builtin_catalog_text();

/// `m:index` with index 1-based within the field, in catalog order.
std::string selector_of(const std::vector<HermLattice>& entries, std::size_t position);
/// Position in `entries` for a selector; throws UnknownCase.
std::size_t find_selector(const std::vector<HermLattice>& entries, std::string_view selector);

}  // namespace hermu
