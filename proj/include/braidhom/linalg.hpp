#pragma once
#include <map>
#include <optional>
#include <type_traits>
#include <vector>

#include "braidhom/error.hpp"
#include "braidhom/scalar.hpp"

namespace braidhom {

// Field operations shared by the symbolic field Q(p) and the specialized
// rationals used for large certified-zero computations.
template <class F> struct FieldOps;

template <> struct FieldOps<Scalar> {
    static Scalar zero() { return Scalar(0); }
    static Scalar one() { return Scalar(1); }
    static bool is_zero(const Scalar& a) { return a.is_zero(); }
    static Scalar neg(const Scalar& a) { return Scalar(0) - a; }
    static Scalar inv(const Scalar& a) { return a.inverse(); }
};

template <> struct FieldOps<Rat> {
    static Rat zero() { return Rat(0); }
    static Rat one() { return Rat(1); }
    static bool is_zero(const Rat& a) { return a == 0; }
    static Rat neg(const Rat& a) { return -a; }
    static Rat inv(const Rat& a) {
        require(a != 0, "DivisionByZero", "inverse of zero");
        return Rat(1) / a;
    }
};

template <class F> using SVec = std::map<int, F>;

template <class F>
void svec_add(SVec<F>& v, int i, const std::type_identity_t<F>& c) {
    if (FieldOps<F>::is_zero(c)) return;
    auto it = v.find(i);
    if (it == v.end()) {
        v.emplace(i, c);
    } else {
        it->second = F(it->second + c);
        if (FieldOps<F>::is_zero(it->second)) v.erase(it);
    }
}

// v += c * w
template <class F>
void svec_axpy(SVec<F>& v, const std::type_identity_t<F>& c, const SVec<F>& w) {
    if (FieldOps<F>::is_zero(c)) return;
    for (auto& [i, a] : w) svec_add<F>(v, i, F(c * a));
}

template <class F>
SVec<F> svec_scaled(const SVec<F>& v, const std::type_identity_t<F>& c) {
    SVec<F> out;
    if (FieldOps<F>::is_zero(c)) return out;
    for (auto& [i, a] : v) out.emplace(i, F(c * a));
    return out;
}

// Column-major sparse matrix: cols[j] maps row index -> entry.
template <class F>
struct SMat {
    int nrows = 0;
    std::vector<SVec<F>> cols;

    SMat() = default;
    SMat(int rows, int columns) : nrows(rows), cols(columns) {}
    int ncols() const { return static_cast<int>(cols.size()); }
    void set(int i, int j, const F& v) {
        require(i >= 0 && i < nrows && j >= 0 && j < ncols(), "IndexOutOfRange", "matrix entry");
        if (FieldOps<F>::is_zero(v)) cols[j].erase(i);
        else cols[j][i] = v;
    }
    void add(int i, int j, const F& v) {
        require(i >= 0 && i < nrows && j >= 0 && j < ncols(), "IndexOutOfRange", "matrix entry");
        svec_add(cols[j], i, v);
    }
    int add_col(SVec<F> c) {
        cols.push_back(std::move(c));
        return ncols() - 1;
    }
};

template <class F>
SVec<F> mat_apply(const SMat<F>& A, const SVec<F>& x) {
    SVec<F> out;
    for (auto& [j, c] : x) {
        require(j >= 0 && j < A.ncols(), "IndexOutOfRange", "mat_apply index");
        svec_axpy(out, c, A.cols[j]);
    }
    return out;
}

template <class F>
SMat<F> mat_mul(const SMat<F>& A, const SMat<F>& B) {
    SMat<F> out(A.nrows, B.ncols());
    for (int j = 0; j < B.ncols(); j++) out.cols[j] = mat_apply(A, B.cols[j]);
    return out;
}

template <class F>
bool mat_is_zero(const SMat<F>& A) {
    for (auto& c : A.cols)
        if (!c.empty()) return false;
    return true;
}

template <class F>
SMat<F> mat_sub(const SMat<F>& A, const SMat<F>& B) {
    require(A.nrows == B.nrows && A.ncols() == B.ncols(), "IndexOutOfRange", "matrix shape mismatch");
    SMat<F> out = A;
    for (int j = 0; j < B.ncols(); j++)
        for (auto& [i, v] : B.cols[j]) svec_add(out.cols[j], i, FieldOps<F>::neg(v));
    return out;
}

template <class F>
SMat<F> mat_identity(int n) {
    SMat<F> out(n, n);
    for (int i = 0; i < n; i++) out.cols[i][i] = FieldOps<F>::one();
    return out;
}

// Reduced row echelon accumulator. Rows are stored keyed by their pivot
// column, the pivot entry is 1 and is the smallest column of its row, and
// pivot columns are eliminated from all other rows (full reduction). All
// choices are deterministic.
template <class F>
class Echelon {
public:
    // Fully reduce v against the current rows.
    SVec<F> reduce(SVec<F> v) const {
        auto it = v.begin();
        while (it != v.end()) {
            auto p = rows_.find(it->first);
            if (p == rows_.end()) {
                ++it;
                continue;
            }
            int col = it->first;
            F c = it->second;
            svec_axpy(v, FieldOps<F>::neg(c), p->second);
            it = v.lower_bound(col + 1);  // entries below col are untouched
        }
        return v;
    }

    // Insert v; returns true if the rank grew.
    bool insert(SVec<F> v) {
        v = reduce(std::move(v));
        if (v.empty()) return false;
        int pivot = v.begin()->first;
        F lead = v.begin()->second;
        if (!(FieldOps<F>::is_zero(lead - FieldOps<F>::one())))
            v = svec_scaled(v, FieldOps<F>::inv(lead));
        for (auto& [pc, row] : rows_) {
            (void)pc;
            auto hit = row.find(pivot);
            if (hit == row.end()) continue;
            F c = hit->second;
            svec_axpy(row, FieldOps<F>::neg(c), v);
        }
        rows_.emplace(pivot, std::move(v));
        return true;
    }

    int rank() const { return static_cast<int>(rows_.size()); }
    const std::map<int, SVec<F>>& rows() const { return rows_; }

private:
    std::map<int, SVec<F>> rows_;
};

// Echelon over pairs (main, tail): pivots live on the main part only; the
// tail records the combination of inserted vectors producing the main part.
template <class F>
class AugmentedEchelon {
public:
    struct Row {
        SVec<F> main, tail;
    };

    Row reduce(SVec<F> main, SVec<F> tail) const {
        auto it = main.begin();
        while (it != main.end()) {
            auto p = rows_.find(it->first);
            if (p == rows_.end()) {
                ++it;
                continue;
            }
            int col = it->first;
            F c = it->second;
            svec_axpy(main, FieldOps<F>::neg(c), p->second.main);
            svec_axpy(tail, FieldOps<F>::neg(c), p->second.tail);
            it = main.lower_bound(col + 1);
        }
        return Row{std::move(main), std::move(tail)};
    }

    // Insert (main, tail); if main reduces to zero, returns the dependency
    // tail without storing anything.
    std::optional<SVec<F>> insert(SVec<F> main, SVec<F> tail) {
        Row r = reduce(std::move(main), std::move(tail));
        if (r.main.empty()) return std::move(r.tail);
        F lead = r.main.begin()->second;
        if (!(FieldOps<F>::is_zero(lead - FieldOps<F>::one()))) {
            F inv = FieldOps<F>::inv(lead);
            r.main = svec_scaled(r.main, inv);
            r.tail = svec_scaled(r.tail, inv);
        }
        int pivot = r.main.begin()->first;
        for (auto& [pc, row] : rows_) {
            (void)pc;
            auto hit = row.main.find(pivot);
            if (hit == row.main.end()) continue;
            F c = hit->second;
            svec_axpy(row.main, FieldOps<F>::neg(c), r.main);
            svec_axpy(row.tail, FieldOps<F>::neg(c), r.tail);
        }
        rows_.emplace(pivot, std::move(r));
        return std::nullopt;
    }

    int rank() const { return static_cast<int>(rows_.size()); }

private:
    std::map<int, Row> rows_;
};

template <class F>
int mat_rank(const SMat<F>& A) {
    Echelon<F> e;
    for (auto& c : A.cols) e.insert(c);
    return e.rank();
}

// Basis of { x : A x = 0 }, deterministic, each vector normalized with
// coefficient 1 on its latest column.
template <class F>
std::vector<SVec<F>> kernel_basis(const SMat<F>& A) {
    AugmentedEchelon<F> e;
    std::vector<SVec<F>> out;
    for (int j = 0; j < A.ncols(); j++) {
        SVec<F> tail;
        tail[j] = FieldOps<F>::one();
        if (auto dep = e.insert(A.cols[j], std::move(tail))) out.push_back(std::move(*dep));
    }
    return out;
}

// Particular solution of A x = b, if any.
template <class F>
std::optional<SVec<F>> solve(const SMat<F>& A, const SVec<F>& b) {
    AugmentedEchelon<F> e;
    for (int j = 0; j < A.ncols(); j++) {
        SVec<F> tail;
        tail[j] = FieldOps<F>::one();
        e.insert(A.cols[j], std::move(tail));
    }
    auto r = e.reduce(b, SVec<F>{});
    if (!r.main.empty()) return std::nullopt;
    SVec<F> x;
    for (auto& [i, c] : r.tail) x.emplace(i, FieldOps<F>::neg(c));
    return x;
}

// dim and representatives of ker(d_out)/im(d_in). The caller must have
// checked d_out * d_in = 0; this function asserts that every image column
// lies in the kernel by verifying the dimension identity.
template <class F>
struct QuotientSpace {
    int dim = 0;
    std::vector<SVec<F>> generators;  // kernel representatives
    int kernel_dim = 0;
    int image_rank = 0;
};

template <class F>
QuotientSpace<F> quotient_space(const SMat<F>& d_out, const SMat<F>& d_in) {
    QuotientSpace<F> q;
    auto kers = kernel_basis(d_out);
    q.kernel_dim = static_cast<int>(kers.size());
    Echelon<F> e;
    for (auto& c : d_in.cols) e.insert(c);
    q.image_rank = e.rank();
    for (auto& k : kers) {
        SVec<F> r = e.reduce(k);
        if (r.empty()) continue;
        e.insert(std::move(r));
        q.generators.push_back(k);
    }
    q.dim = static_cast<int>(q.generators.size());
    require(q.dim == q.kernel_dim - q.image_rank, "NotAComplex",
            "image does not lie inside the kernel");
    return q;
}

inline SVec<Rat> specialize(const SVec<Scalar>& v, const SpecPoint& pt) {
    SVec<Rat> out;
    for (auto& [i, c] : v) {
        Rat r = c.specialize(pt.p0);
        if (r != 0) out.emplace(i, r);
    }
    return out;
}

inline SMat<Rat> specialize(const SMat<Scalar>& A, const SpecPoint& pt) {
    SMat<Rat> out(A.nrows, A.ncols());
    for (int j = 0; j < A.ncols(); j++) out.cols[j] = specialize(A.cols[j], pt);
    return out;
}

} // namespace braidhom
