#include "eacws/ea_reduction.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace eacws {

namespace {

// Row of the reduced matrix as a Pauli on layout (n-c, c): non-ebit columns
// keep their relative order as the sender part, ebit column k becomes
// receiver qubit k.
PauliOperator remap_row(const CheckMatrix& cm, std::size_t r,
                        const std::vector<std::size_t>& ebit_columns) {
    std::size_t n = cm.n, c = ebit_columns.size();
    QubitLayout layout = make_layout(n - c, c);
    PauliOperator p = identity_pauli(layout);
    std::size_t alice = 0;
    for (std::size_t col = 0; col < n; ++col) {
        bool is_ebit = std::binary_search(ebit_columns.begin(), ebit_columns.end(), col);
        std::size_t pos;
        if (is_ebit) {
            std::size_t k = static_cast<std::size_t>(
                std::lower_bound(ebit_columns.begin(), ebit_columns.end(), col) -
                ebit_columns.begin());
            pos = (n - c) + k;
        } else {
            pos = alice++;
        }
        p.x.set(pos, cm.hx.rows[r].get(col));
        p.z.set(pos, cm.hz.rows[r].get(col));
    }
    return p;
}

// Symplectic product over the sender part only.
bool truncated_anticommute(const PauliOperator& a, const PauliOperator& b) {
    bool s = false;
    for (std::size_t q = 0; q < a.layout.n; ++q) {
        s ^= a.x.get(q) && b.z.get(q);
        s ^= a.z.get(q) && b.x.get(q);
    }
    return s;
}

}  // namespace

EAReduction reduce_check_matrix(const CheckMatrix& cm, std::vector<std::size_t> ebit_columns) {
    std::sort(ebit_columns.begin(), ebit_columns.end());
    ebit_columns.erase(std::unique(ebit_columns.begin(), ebit_columns.end()), ebit_columns.end());
    for (std::size_t col : ebit_columns) {
        if (col >= cm.n) throw std::invalid_argument("ebit column out of range");
    }
    std::size_t c = ebit_columns.size();
    if (cm.rows() < 2 * c)
        throw std::invalid_argument("check matrix has fewer rows than twice the ebit count");

    // Pivot on the X half of each ebit column, then the Z half.
    std::vector<std::size_t> pivot_cols;
    for (std::size_t col : ebit_columns) pivot_cols.push_back(col);
    for (std::size_t col : ebit_columns) pivot_cols.push_back(cm.n + col);
    BitMatrix flat = cm.flat();
    auto pivoted = gf2_eliminate(flat, pivot_cols);
    if (pivoted.size() != 2 * c) {
        std::size_t full = 0;
        for (std::size_t col : ebit_columns) {
            bool px = std::find(pivoted.begin(), pivoted.end(), col) != pivoted.end();
            bool pz = std::find(pivoted.begin(), pivoted.end(), cm.n + col) != pivoted.end();
            if (px && pz) ++full;
        }
        std::ostringstream os;
        os << "requested " << c << " ebit columns but only " << full
           << " support both an X and a Z pivot";
        throw std::invalid_argument(os.str());
    }

    EAReduction red;
    red.reduced = check_matrix_from_rows(cm.n, flat.rows);
    red.ebit_columns = ebit_columns;
    red.c = c;
    for (std::size_t r = 0; r < red.reduced.rows(); ++r) {
        PauliOperator p = remap_row(red.reduced, r, ebit_columns);
        if (r < c)
            red.h_rows.push_back(p);
        else if (r < 2 * c)
            red.g_rows.push_back(p);
        else
            red.remainder.push_back(p);
    }
    return red;
}

void verify_reduction(const EAReduction& red, const CheckMatrix& original) {
    if (red.reduced.n != original.n || red.reduced.rows() != original.rows())
        throw std::runtime_error("reduced matrix shape differs from the original");
    if (!gf2_row_space_equal(red.reduced.flat(), original.flat()))
        throw std::runtime_error("reduced matrix does not span the original row space");

    std::size_t c = red.c;
    for (std::size_t j = 0; j < c; ++j) {
        std::size_t e = red.ebit_columns[j];
        const auto& h = red.reduced;
        if (!h.hx.rows[j].get(e) || h.hz.rows[j].get(e))
            throw std::runtime_error("X pivot row lacks its lone X on the ebit column");
        if (!h.hz.rows[c + j].get(e) || h.hx.rows[c + j].get(e))
            throw std::runtime_error("Z pivot row lacks its lone Z on the ebit column");
        for (std::size_t r = 0; r < h.rows(); ++r) {
            if (r == j || r == c + j) continue;
            if (h.hx.rows[r].get(e) || h.hz.rows[r].get(e))
                throw std::runtime_error("ebit column support leaked outside its pivot rows");
        }
    }

    // Truncated to the sender part, each (g'_j, h'_j) pair anticommutes and
    // every other pair commutes; the ebit halves restore full commutation.
    auto rows = std::vector<const PauliOperator*>();
    for (const auto& p : red.h_rows) rows.push_back(&p);
    for (const auto& p : red.g_rows) rows.push_back(&p);
    for (const auto& p : red.remainder) rows.push_back(&p);
    for (std::size_t a = 0; a < rows.size(); ++a) {
        for (std::size_t b = a + 1; b < rows.size(); ++b) {
            bool anti = truncated_anticommute(*rows[a], *rows[b]);
            bool expect = b == c + a && a < c;  // h'_j against its g'_j
            if (anti != expect) {
                std::ostringstream os;
                os << "truncated rows " << a << " and " << b
                   << (anti ? " anticommute" : " commute") << " unexpectedly";
                throw std::runtime_error(os.str());
            }
        }
    }
}

}  // namespace eacws
