#pragma once
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "braidhom/braid.hpp"
#include "braidhom/linalg.hpp"

namespace braidhom {

// ---------------------------------------------------------------------------
// Chain spaces
//
// The braided Hochschild complex of A with coefficients in the regular
// bimodule M = A has chain spaces C_n = M (x) A^{(x)n}; chains are
// (n+1)-leg tensors over a single presentation, leg 0 playing the module
// role.  All computations happen on finite windows: tuples of normal-form
// monomials whose total filtration is bounded (and whose total multidegree
// is pinned when the window carries a degree).
// ---------------------------------------------------------------------------

// Everything the chain-level operators consume.  `hopf` carries the braided
// Hopf structure (coproduct, counit, antipode) used by the derived right
// action and the xi conjugations; it may be null for examples that only
// support the simplicial/cyclic operators.
struct ChainContext {
    std::shared_ptr<Presentation> A;
    std::shared_ptr<const Braiding> braid;
    std::shared_ptr<const RibbonAut> sigma;
    std::shared_ptr<Hopf> hopf;
};

// Deterministic basis of a window of C_n (arity n = number of algebra legs
// beyond the module leg, so tuples have n+1 entries).  Tuple order is
// lexicographic in the presentation's monomial order, leg 0 outermost.
struct ChainBasis {
    const Presentation* A = nullptr;
    int arity = 0;
    Window window;
    std::vector<Tensor::Key> keys;
    std::map<Tensor::Key, int> index;

    int dim() const { return static_cast<int>(keys.size()); }
    Tensor chain(int i) const;  // basis tuple as a single-term tensor
    std::string str(int i) const;
};

ChainBasis chain_basis(const Presentation* A, int arity, const Window& w);

// Coordinates of a chain in a basis window.  Every term must land inside
// the window, else WindowOverflow (never silent truncation).
SVec<Scalar> chain_coords(const ChainBasis& basis, const Tensor& t);
Tensor coords_chain(const ChainBasis& basis, const SVec<Scalar>& v);
std::string chain_string(const ChainBasis& basis, const SVec<Scalar>& v);

// Full window partitioned into total-multidegree blocks.  Every operator in
// this module preserves total multidegree, so homology decomposes blockwise
// for graded presentations.
struct BlockedChain {
    ChainBasis full;
    std::map<std::vector<long>, std::vector<int>> blocks;  // degree -> indices
};

BlockedChain blocked_chain(const Presentation* A, int arity, int max_filtration);

// ---------------------------------------------------------------------------
// Simplicial, cyclic and twisted operators
// ---------------------------------------------------------------------------

// Face d_j on C_n (chain has n+1 legs, n >= 1):
//   d_0 multiplies the module leg by leg 1,
//   d_j (1 <= j <= n-1) multiplies legs j and j+1,
//   d_n braids the last leg in front of everything, applies sigma, and
//       multiplies into the module leg.
Tensor face_map(const ChainContext& C, int j, const Tensor& chain);

// b_n = sum_{j=0}^{n} (-1)^j d_j; zero map for n = 0.
Tensor boundary_b(const ChainContext& C, const Tensor& chain);

// Bar differential b' on A^{(x)k}: sum of adjacent multiplications with
// alternating signs (no module leg, no braiding).
Tensor boundary_bprime(const ChainContext& C, const Tensor& chain);

// Degeneracy s_i on C_n inserts a unit leg after position i+1; i ranges
// over -1..n, with s_{-1} the extra degeneracy prepending a unit at leg 0.
Tensor degeneracy(const ChainContext& C, int i, const Tensor& chain);

// Cyclic operator t_n = (sigma (x) id^n) Psi_{[0,n-1],n} and its power
// T_n = t_n^{n+1}; t_0 = sigma.
Tensor cyclic_t(const ChainContext& C, const Tensor& chain);
Tensor cyclic_T(const ChainContext& C, const Tensor& chain);

// Connes boundary at chain level: B_n = s_{-1} . sum_{i=0}^n (-1)^{ni} t_n^i.
// The operator is only meaningful on the cyclic quotient; the quotient
// handling happens at the matrix level.
Tensor connes_B(const ChainContext& C, const Tensor& chain);

// ---------------------------------------------------------------------------
// Braided enveloping actions and the derived right action
// ---------------------------------------------------------------------------

// Product of A^e = A (x) A^op-bar: (mu (x) mu) PsiInv_{2,3} PsiInv_{1,2}.
Tensor ae_multiply(const ChainContext& C, const Tensor& u, const Tensor& v);

// Left action (a (x) b) |> m = sum a . m' . b' with PsiInv(b (x) m) = m' (x) b'.
Element ae_left(const ChainContext& C, const Tensor& u, const Element& m);

// Right action m <| (a (x) b) = sum sigma(b') . (m a)' with
// Psi(m a (x) b) = b' (x) (m a)'.
Element ae_right(const ChainContext& C, const Element& m, const Tensor& u);

// Recovery of the one-sided actions from each enveloping action.
Element ae_left_recover_lmul(const ChainContext& C, const Element& a, const Element& m);
Element ae_left_recover_rmul(const ChainContext& C, const Element& m, const Element& a);
Element ae_right_recover_lmul(const ChainContext& C, const Element& a, const Element& m);
Element ae_right_recover_rmul(const ChainContext& C, const Element& m, const Element& a);

// Right action of A on the derived-functor coefficient object R(M):
//   m <| h = sum sigma(Sbar^{-1}(h1')) . m' . h2   with Psi(m (x) h1) = h1' (x) m'.
// Extended to words letterwise and bilinearly.  Requires C.hopf.
Element r_act(const ChainContext& C, const Element& m, const Element& h);

// ---------------------------------------------------------------------------
// xi conjugation between the braided complex and the twisted bar complex
// ---------------------------------------------------------------------------

// xi_n (prime = false) and xi'_n (prime = true) on C_n, n >= 1:
//   xi_1  = |>_{0,1} (sigma Sbar^{-1} (x) id^2) Psi_{0,1} (id (x) Delta)
//   xi'_1 = |>_{0,1} (sigma (x) id^2) Psi_{0,1} (id (x) Delta)
//   xi_{n+1}  = PsiInv_{[1,n],n+1} (xi_1 (x) id^n) Psi_{[1,n],n+1} (xi_n (x) id)
//   xi'_{n+1} = (xi'_n (x) id) PsiInv_{[1,n],n+1} (xi'_1 (x) id^n) Psi_{[1,n],n+1}
Tensor xi_map(const ChainContext& C, const Tensor& chain, bool prime);

// Twisted faces: dt_0 = (<| (x) id^n) collapses legs 0,1 through the derived
// right action, dt_{n+1} = id^{(n+1)} (x) counit.  Middle faces agree with
// the plain d_j.  bt_n = dt_0 + sum_{j=1}^{n} (-1)^j d_j + (-1)^{n+1} dt_{n+1}
// on C_{n+1} -> C_n; equals xi'_n b_{n+1} xi_{n+1} on windows.
Tensor face_tilde_zero(const ChainContext& C, const Tensor& chain);
Tensor face_tilde_last(const ChainContext& C, const Tensor& chain);
Tensor boundary_b_tilde(const ChainContext& C, const Tensor& chain);

// ---------------------------------------------------------------------------
// Operator assembly
// ---------------------------------------------------------------------------

using ChainOp = std::function<Tensor(const Tensor&)>;

struct LinearOperator {
    std::shared_ptr<const ChainBasis> source, target;
    SMat<Scalar> mat;
};

// Matrix of a chain operator between two windowed bases.  Throws
// WindowOverflow when an image term escapes the target window.
LinearOperator assemble_operator(const ChainOp& op,
                                 std::shared_ptr<const ChainBasis> source,
                                 std::shared_ptr<const ChainBasis> target);

// Matrix of a degree-preserving chain operator restricted to one
// multidegree block of the source/target windows.
SMat<Scalar> assemble_block(const ChainOp& op, const BlockedChain& src,
                            const BlockedChain& tgt, const std::vector<long>& key);

// ---------------------------------------------------------------------------
// Free resolutions
// ---------------------------------------------------------------------------

// Free resolution of the trivial module by free left A-modules
//   0 -> A^{r_L} -> ... -> A^{r_1} -> A^{r_0} -> k -> 0 ,
// rows act from the left: phi_s(e_i) = sum_k M[s][i][k] e_k with
// M[s] = boundary[s-1] of shape ranks[s] x ranks[s-1].  `shifts[s][i]` is
// the multidegree of the i-th basis vector of level s (graded cases).
struct ResolutionSpec {
    std::shared_ptr<Presentation> A;
    std::vector<int> ranks;
    std::vector<std::vector<std::vector<Element>>> boundary;
    std::vector<std::vector<std::vector<long>>> shifts;
    bool graded = false;

    int length() const { return static_cast<int>(ranks.size()) - 1; }
    // Verifies phi_s . phi_{s+1} = 0 symbolically on free generators and the
    // augmentation counit against phi_1; AxiomViolation on failure.
    void check_composites(const Hopf* hopf) const;
};

// ---------------------------------------------------------------------------
// Homology drivers and reports
// ---------------------------------------------------------------------------

struct HomologyOptions {
    int max_n = 2;             // top homological degree reported
    int max_weight = 6;        // filtration bound of the windows
    bool force_symbolic = false;
    bool force_specialized = false;
    int symbolic_threshold = 2000;  // columns per block before specializing
    SpecPoint spec_point{};
    int workers = 1;
    bool want_generators = true;
};

struct DegreeResult {
    int n = 0;
    std::optional<std::vector<long>> degree;  // block key; nullopt = filtered run
    int dim = 0;
    std::string soundness;  // "exact" | "kernel-window" | "certified-zero"
    std::vector<std::string> generators;
};

struct HomologyReport {
    std::string example, braiding, method;
    std::string sigma_lambda;  // "generic" or the scalar string of lambda
    bool specialized = false;  // any block computed at the specialization point
    Rat specialized_p = 0;
    int max_n = 0;
    int max_weight = 0;
    std::vector<DegreeResult> results;

    std::map<int, int> dims() const;  // per-n totals over all blocks
    std::string to_json() const;
    std::string to_text() const;
    std::string to_csv() const;
};

// Exact graded homology of the braided Hochschild complex on the window
// weight <= max_weight, per multidegree block, degrees n <= max_n.
// Requires the presentation's rules to be multidegree-homogeneous.
HomologyReport hochschild_bar(const ChainContext& C, const HomologyOptions& opt);

// Homology of R(M) (x)_A F. for a catalogued free resolution.  Graded specs
// give exact degreewise dimensions; filtered specs report kernel-window
// dimensions dim ker(f|F_D) for the top level only.
HomologyReport tor_from_resolution(const ChainContext& C, const ResolutionSpec& R,
                                   const HomologyOptions& opt);

// Cyclic homology of the quotient mixed complex (C^{Psi,sigma}, b, B): per
// block and arity the splitting C_n = ker(1-T) (+) im(1-T) is verified
// (NotSplit otherwise), b and B are checked to descend, the mixed-complex
// identities are asserted, and HC_k is the homology of the total complex.
HomologyReport hc_total_complex(const ChainContext& C, const HomologyOptions& opt);

// Membership certificates: for every normal monomial of filtration
// <= target_filt, attempt to solve b_1 xi = m with xi inside the arity-1
// window of filtration <= source_filt.  Certified entries carry an explicit
// preimage; HH_0 vanishing on the window follows when all are certified.
struct CertificateEntry {
    std::string target;
    bool certified = false;
    std::string preimage;
};

struct CertificateReport {
    bool all_certified = true;
    bool specialized = false;
    Rat specialized_p = 0;
    std::vector<CertificateEntry> entries;
    HomologyReport report(const std::string& example, const std::string& lambda) const;
};

CertificateReport hh0_certificates(const ChainContext& C, int source_filt,
                                   int target_filt, const HomologyOptions& opt);

// Homology in degree 1 of the subcomplex C^1 = im(1 - T) with the restricted
// Hochschild boundary, plus a witness test: returns the dimension of
// H_1(C^1) and whether the witness chain is a nontrivial class in it.
struct SubcomplexH1 {
    int dim = 0;
    bool witness_in_c1 = false;
    bool witness_is_cycle = false;
    bool witness_nontrivial = false;
};

SubcomplexH1 c1_subcomplex_h1(const ChainContext& C, int max_weight,
                              const Tensor& witness);

} // namespace braidhom
