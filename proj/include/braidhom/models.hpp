#pragma once
#include "braidhom/braid.hpp"
#include "braidhom/homology.hpp"
#include "braidhom/hopf.hpp"

namespace braidhom {

// Built-in catalog: presentations, Hopf data, coactions, coquasitriangular
// forms, and proof-device functionals for the bundled examples. Braiding
// oracles, ribbon data, and resolutions are layered on top of these by the
// braid module's specs.

// ---------------------------------------------------------------------------
// Presentations
// ---------------------------------------------------------------------------

// C[x], single generator of weight 1.
std::shared_ptr<Presentation> line_presentation();
// Manin's quantum plane: yx = q xy.
std::shared_ptr<Presentation> plane_presentation();
// Coordinate algebra of quantum SL(2); PBW monomials a^i b^j c^k with
// a^i := d^{-i} for i < 0.
std::shared_ptr<Presentation> slq2_presentation();
// Transmuted braided SL(2); PBW monomials x^i u^j z^k with x^i := y^{-i}
// for i < 0.
std::shared_ptr<Presentation> B_presentation();
// Three-dimensional algebra spanned by 1, x, y with all products of
// generators zero.
std::shared_ptr<Presentation> toy3_presentation();
// Group algebra of Z: one invertible group-like generator t.
std::shared_ptr<Presentation> laurent_presentation();

// ---------------------------------------------------------------------------
// Hopf structures
// ---------------------------------------------------------------------------

std::shared_ptr<Hopf> laurent_hopf(std::shared_ptr<Presentation> P);
std::shared_ptr<Hopf> slq2_hopf(std::shared_ptr<Presentation> P);

// Braided Hopf structures (structure tables only; braid hooks must be set
// before coproducts/antipodes of words of length > 1 are requested).
//
// Caveat for the plane: the additive coproduct tables make the quantum plane
// a braided Hopf algebra only for the covector braiding normalised with
// Psi(x (x) x) = q^2 x (x) x, not for the categorical braiding of the
// catalogued r-form (check_axioms with the latter correctly reports the
// coproduct as incompatible with yx = qxy). The generator-level tables are
// still exactly what the derived-functor right action consumes, and the
// resulting action is well defined; only whole-algebra coproducts/antipodes
// are out of scope for the plane.
std::shared_ptr<Hopf> line_braided_hopf(std::shared_ptr<Presentation> P);
std::shared_ptr<Hopf> plane_braided_hopf(std::shared_ptr<Presentation> P);
std::shared_ptr<Hopf> B_braided_hopf(std::shared_ptr<Presentation> P);

// ---------------------------------------------------------------------------
// Coquasitriangular forms
// ---------------------------------------------------------------------------

// r(t^m, t^n) = q^{mn}.
std::shared_ptr<RForm> laurent_rform(std::shared_ptr<Hopf> H);
// The universal r-form of quantum SL(2): nonzero base values
// r(a,a) = r(d,d) = q^{1/2}, r(a,d) = r(d,a) = q^{-1/2},
// r(c,b) = q^{-1/2}(q - q^{-1}).
std::shared_ptr<RForm> slq2_rform(std::shared_ptr<Hopf> H);

// ---------------------------------------------------------------------------
// Coactions
// ---------------------------------------------------------------------------

// x^m -> x^m (x) t^m.
std::shared_ptr<Coaction> line_coaction(std::shared_ptr<Presentation> A,
                                        std::shared_ptr<Hopf> H);
// [y, x] -> [y, x] (x) [[a, b], [c, d]], the fundamental corepresentation.
std::shared_ptr<Coaction> plane_coaction(std::shared_ptr<Presentation> A,
                                         std::shared_ptr<Hopf> H);
// The coaction Delta of H on itself.
std::shared_ptr<Coaction> slq2_canonical_coaction(std::shared_ptr<Hopf> H);

// ---------------------------------------------------------------------------
// Proof-device functionals
// ---------------------------------------------------------------------------

// The convolution invertible functional phi on quantum SL(2) with
// coboundary r:  phi(a^{i+1} b^j c^k) = 0 = phi(d^{i+1} b^j c^k),
// phi(b^j c^k) = q^{((j+k) - (j-k)^2)/4} beta^j gamma^k with beta = q^{-1/4},
// gamma = -q^{-5/4}; for this choice phi^2 is cocentral and
// (phi^2)^{-1} is a ribbon functional.
Functional slq2_varphi(std::shared_ptr<Hopf> H);

// ---------------------------------------------------------------------------
// Braidings with catalogued closed-form oracles
// ---------------------------------------------------------------------------

// Each builder registers the comodule's coaction and the closed-form braiding
// table (generator pairs plus small-exponent monomial families); in mode Both
// (the default) every engine evaluation covered by the table is cross-checked
// against it.

// Psi(x^m (x) x^n) = q^{mn} x^n (x) x^m.
std::shared_ptr<Braiding> line_braiding(std::shared_ptr<Presentation> A,
                                        std::shared_ptr<Hopf> H,
                                        std::shared_ptr<RForm> R,
                                        BraidMode mode = BraidMode::Both);
std::shared_ptr<Braiding> plane_braiding(std::shared_ptr<Presentation> A,
                                         std::shared_ptr<Hopf> H,
                                         std::shared_ptr<RForm> R,
                                         BraidMode mode = BraidMode::Both);
// Canonical braiding of quantum SL(2) coacting on itself by Delta.
std::shared_ptr<Braiding> slq2_braiding(std::shared_ptr<Hopf> H,
                                        std::shared_ptr<RForm> R,
                                        BraidMode mode = BraidMode::Both);
// The Psi-commutative braiding f (x) g -> rbar(f1,g1) g2 (x) f2 r(f3,g3) on
// quantum SL(2) itself (custom engine; mu o Psi = mu; no oracle table).
std::shared_ptr<Braiding> baez_braiding(std::shared_ptr<Hopf> H,
                                        std::shared_ptr<RForm> R);
// Flip braiding, realised by the trivial coaction of the group algebra of Z.
std::shared_ptr<Braiding> toy3_braiding(std::shared_ptr<Presentation> A);

// ---------------------------------------------------------------------------
// Transmuted presentation utilities
// ---------------------------------------------------------------------------

// Images of the transmuted generators inside quantum SL(2):
//   u -> d, x -> q b, y -> q c, z -> (q a - q d)/(q + q^{-1}).
Element B_letter_image(const Presentation* B, const Presentation* Hp, const Letter& l);
// Image of a PBW monomial of the transmuted presentation: the ordered
// transmuted product of its letter images.
Element B_monomial_image(const Transmuted& T, const Presentation* B, const Monomial& m);
// Inverse of the generator substitution, defined on span{1, a, b, c, d}.
Element slq2_linear_to_B(const Presentation* Hp, const Presentation* B, const Element& e);
// Right adjoint coaction of quantum SL(2) on the transmuted presentation,
// transported through the generator substitution.
std::shared_ptr<Coaction> B_coaction(std::shared_ptr<Presentation> B,
                                     std::shared_ptr<Hopf> H,
                                     std::shared_ptr<RForm> R);
std::shared_ptr<Braiding> B_braiding(std::shared_ptr<Presentation> B,
                                     std::shared_ptr<Hopf> H,
                                     std::shared_ptr<RForm> R,
                                     BraidMode mode = BraidMode::Both);

// ---------------------------------------------------------------------------
// Ribbon automorphism generator tables
// ---------------------------------------------------------------------------

// sigma(g) = lambda g on every positive generator (line, plane).
std::map<Letter, Element> scaling_sigma_table(const Presentation* A, const Scalar& lambda);
// sigma_pm(g) = pm q^{3/2} g for g = a, b, c, d; sign is +1 or -1.
std::map<Letter, Element> slq2_sigma_table(const Presentation* H, int sign);
// sigma_pm(u) = pm[u + (1 - q^4) z], sigma_pm(g) = pm q^4 g for g = x, y, z.
std::map<Letter, Element> B_sigma_table(const Presentation* B, int sign);
// sigma(x) = x, sigma(y) = x + y.
std::map<Letter, Element> toy3_sigma_table(const Presentation* A);
// sigma = id on generators (the Baez braiding's ribbon automorphism).
std::map<Letter, Element> identity_sigma_table(const Presentation* A);

// ---------------------------------------------------------------------------
// Catalogued free resolutions of the trivial module
// ---------------------------------------------------------------------------

// 0 -> A --x--> A -> k -> 0 for the line.
ResolutionSpec line_resolution(std::shared_ptr<Presentation> A);
// Koszul resolution 0 -> A --(y,-qx)--> A^2 --(x;y)--> A -> k -> 0.
ResolutionSpec plane_resolution(std::shared_ptr<Presentation> A);
// Length-3 resolution 0 -> A -> A^3 -> A^3 -> A -> k -> 0 of the braided
// SL(2) counit, with
//   phi_1 = (x; y; u-1),
//   phi_2 = [[q^{-2}u - 1, 0, -x], [0, q^2 u - 1, -y], [-y, q^2 x, (1-q^2)(u+1)]],
//   phi_3 = (y, -q^2 x, u-1).
ResolutionSpec B_resolution(std::shared_ptr<Presentation> B);

// ---------------------------------------------------------------------------
// Quantum-plane proof functionals
// ---------------------------------------------------------------------------

// tau_{s,t}(x^i y^j) = delta_{s,i} delta_{t,j}, extended linearly; evaluates
// one-leg chains over the plane (ArityMismatch otherwise).  For
// lambda = q^{-N/2} and s + t = N + 1 it is a braided cyclic 0-cocycle:
// tau_{s,t} . b_1 = 0.
Scalar plane_tau(const Presentation* A, long s, long t, const Tensor& chain);

// Euler derivations: partial_1(x^m y^n) = m x^m y^n (which = 1) and
// partial_2(x^m y^n) = n x^m y^n (which = 2).
Element plane_partial(const Presentation* A, int which, const Element& a);

// phi_{s,t}(a (x) b (x) c)
//   = tau_{s,t}( a [ partial_1(b) partial_2(c) - partial_2(b) partial_1(c) ] );
// evaluates three-leg chains (ArityMismatch otherwise).  For s + t = N + 1 it
// is a braided Hochschild 2-cocycle: phi_{s,t} . b_3 = 0, and it pairs
// nontrivially with the Connes classes B_1[x^m y^n (x) x].
Scalar plane_phi(const Presentation* A, long s, long t, const Tensor& chain);

// ---------------------------------------------------------------------------
// Example bundles
// ---------------------------------------------------------------------------

struct LoadParams {
    // Ribbon scaling parameter for braided_line / quantum_plane:
    // "generic:<scalar>" (anything Scalar::parse accepts) or "qpow:<k>"
    // meaning lambda = q^{k/2}.  Empty selects the example default
    // ("generic:3").  ConfigError when set on an example with fixed ribbon
    // data.
    std::string lambda;
    // Ribbon sign (+1 / -1) choosing between the paired ribbon automorphisms
    // of slq2_canonical / braided_B; ignored elsewhere.
    int sign = +1;
    // Re-run the structural axiom checks on a small window at load time.
    bool run_axiom_suite = false;
};

// How the ribbon automorphism was constructed (reporting only).
struct RibbonDesc {
    std::string lambda;  // printable scaling parameter, "" when fixed
    int sign = +1;
    std::string note;
};

// A fully wired example: algebra, braiding, ribbon automorphism, braided
// Hopf structure when catalogued, plus resolutions and closed-form oracles.
struct ExampleBundle {
    std::string name, description;

    std::shared_ptr<Presentation> A;  // algebra whose homology is taken
    std::shared_ptr<Presentation> H;  // background coacting Hopf algebra
    std::shared_ptr<Hopf> hopf_H;     // Hopf structure on H
    std::shared_ptr<Hopf> hopf_A;     // braided Hopf structure on A (nullable)
    std::shared_ptr<RForm> rform;     // coquasitriangular form on H (nullable)
    std::shared_ptr<Braiding> braid;
    std::shared_ptr<RibbonAut> sigma;
    std::string braiding_name;
    RibbonDesc ribbon;

    std::optional<ResolutionSpec> resolution;

    // Closed-form right action m <| g of a generator letter on a normal
    // monomial; throws NotInOracle on uncatalogued pairs.  Null when the
    // example has no catalogued action.
    std::function<Element(const Monomial&, const Letter&)> raction_oracle;

    // Closed-form braiding families Psi(v (x) w) on catalogued monomial
    // pairs (independent of the registered generator-pair oracle table);
    // throws NotInOracle on uncatalogued pairs.  Null when uncatalogued.
    std::function<Tensor(const Monomial&, const Monomial&)> braiding_family;

    std::vector<std::string> checks;    // check names understood by `verify`
    std::vector<std::string> theorems;  // statements the engine reproduces

    ChainContext chain_context() const { return ChainContext{A, braid, sigma, hopf_A}; }
    const ResolutionSpec& require_resolution() const;  // NoResolution
};

// Names accepted by load_example, in listing order: braided_line,
// quantum_plane, slq2_canonical, slq2_baez, braided_B, toy3.
std::vector<std::string> example_names();

ExampleBundle load_example(const std::string& name, const LoadParams& params = {});

// JSON description of a bundle: presentation, r-form letter table, braiding
// oracle entries, ribbon data, resolution shape, checks and theorems.
std::string bundle_to_json(const ExampleBundle& b);

} // namespace braidhom
