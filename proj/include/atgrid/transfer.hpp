#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "atgrid/eisenstein.hpp"
#include "atgrid/graph.hpp"
#include "atgrid/polycoeff.hpp"

namespace atgrid {

// A proper coloring of the layer cycle stored as cube-root residues:
// position i carries color w^{u[i]}.
using ProperColoring = std::vector<std::uint8_t>;

struct TransferGuards {
    int max_layer_vertices = 14;  // coloring enumeration (count is ~2^n)
    int max_matrix_layer = 10;    // dense matrix build / powering (dim = 2^n + 2(-1)^n)
};

// All proper colorings of h with colors 0..num_colors-1, lexicographically
// sorted (the deterministic index set of the transfer matrix).
std::vector<ProperColoring> enumerate_colorings(const Graph& h, int num_colors = 3,
                                                const TransferGuards& guards = {});

// Residue of the unique color not in {u_i, u_{i-1}} (indices cyclic).
int complement_color_residue(const ProperColoring& u, std::size_t i);
EisensteinInt complement_color(const ProperColoring& u, std::size_t i);

enum class MatrixMode {
    general,     // f_H(u) * prod_i (u_i - v_i) / prod_{b != u_i} (u_i - b)
    cycle_fast,  // prod_i (u_i - v_i) / (u_i - u_i*)
};

/**
 * The transfer matrix of a layer cycle over Z[w]: rows and columns indexed
 * by the proper 3-colorings of the layer, entry (u, v) nonzero only when u
 * and v differ at every position. tr M^k is the all-exponents-(d+1)
 * coefficient of the graph polynomial of layer x C_k, up to the documented
 * bridge sign.
 */
class TransferMatrix {
  public:
    TransferMatrix(Graph layer, std::vector<ProperColoring> colorings,
                   std::vector<EisensteinInt> entries);

    int dim() const noexcept { return dim_; }
    const Graph& layer() const noexcept { return layer_; }
    const std::vector<ProperColoring>& colorings() const noexcept { return colorings_; }

    const EisensteinInt& at(int row, int col) const {
        return entries_[static_cast<std::size_t>(row) * static_cast<std::size_t>(dim_) +
                        static_cast<std::size_t>(col)];
    }

  private:
    Graph layer_;
    std::vector<ProperColoring> colorings_;
    std::vector<EisensteinInt> entries_;
    int dim_ = 0;
};

// Layer must be the canonical cycle (vertices in cycle order); both modes
// produce identical matrices on odd cycles, and differ by a global -1 on
// even cycles (the canonical edge product vs the cyclic product).
TransferMatrix build_matrix(const Graph& h, MatrixMode mode = MatrixMode::general,
                            const TransferGuards& guards = {}, int threads = 0);

// Exact entrywise check conj(M^T) == -M.
bool is_antihermitian(const TransferMatrix& m);

// Exact tr M^k by repeated exact multiplication, k >= 1.
EisensteinInt trace_power(const TransferMatrix& m, int k, int threads = 0);

/**
 * The cyclic color-ratio sequence of a proper cycle coloring:
 * eps[i] in {1, 2} with u_i = w^{eps[i]} * u_{i-1}; the residues always sum
 * to 0 mod 3 (the product of the ratios telescopes to 1).
 */
struct RatioSequence {
    std::vector<int> eps;

    EisensteinInt ratio(std::size_t i) const { return EisensteinInt::unit_root(eps[i]); }
    EisensteinInt product() const;
};

RatioSequence ratio_sequence(const ProperColoring& u);

struct ParityReport {
    std::vector<bool> white;        // white iff u_i = w * v_i
    int boundary_count = 0;         // cyclic adjacent pairs with different class
    bool boundary_even = false;
    bool ratio_products_match = false;  // prod (1 - eps_i) == prod (1 - delta_i)
};

// The white/black index diagnostic behind the antihermitian property; u and
// v must be proper colorings of the same odd cycle differing everywhere.
ParityReport antihermitian_parity_diagnostic(const ProperColoring& u, const ProperColoring& v);

// tr(M(C_m)^k) with the general-mode matrix.
EisensteinInt torus_coefficient(int m, int k, const TransferGuards& guards = {},
                                int threads = 0);

// Sign linking tr M^k to the canonical-order coefficient of the
// all-exponents-2 monomial of the torus polynomial. The layered product
// orients each outer wrap edge against the canonical i < j order, one
// flipped factor per layer vertex, hence (-1)^layer.
int sign_bridge(int layer_vertices);

enum class CertificateKind {
    trace,                    // nonzero trace, AT = 3
    trace_zero_with_witness,  // zero trace + capped-3 nonzero monomial, AT = 4
    trace_zero_cited_upper,   // zero trace; <= 4 from the known product bound
    theorem_cited,            // beyond configured guards; value from the known table
};

struct TorusCertificate {
    int m = 0;
    int n = 0;
    int layer = 0;  // cycle length used as the matrix layer
    int power = 0;  // outer cycle length
    int at = 0;     // 3 or 4
    std::optional<int> dim;
    std::optional<EisensteinInt> trace;
    std::optional<bool> antihermitian;
    int sigma = 1;
    CertificateKind kind = CertificateKind::theorem_cited;
    std::string note;
    std::optional<AlonTarsiResult> witness;  // capped-3 witness (odd x odd, small)
};

const char* certificate_kind_name(CertificateKind kind);

TorusCertificate at_torus(int m, int n, const TransferGuards& guards = {},
                          const PolyGuards& poly_guards = {}, int threads = 0);

}  // namespace atgrid
