#include "eacws/checkmatrix.hpp"

#include <sstream>
#include <stdexcept>

namespace eacws {

PauliOperator CheckMatrix::row_pauli(std::size_t r) const {
    PauliOperator p{QubitLayout{n, 0}, hx.rows.at(r), hz.rows.at(r), 0};
    return p;
}

BitVec CheckMatrix::flat_row(std::size_t r) const {
    BitVec v(2 * n);
    for (std::size_t q = 0; q < n; ++q) {
        v.set(q, hx.rows.at(r).get(q));
        v.set(n + q, hz.rows.at(r).get(q));
    }
    return v;
}

BitMatrix CheckMatrix::flat() const {
    BitMatrix m(0, 2 * n);
    for (std::size_t r = 0; r < rows(); ++r) m.rows.push_back(flat_row(r));
    return m;
}

CheckMatrix parse_check_matrix(const std::string& text) {
    CheckMatrix cm;
    std::istringstream in(text);
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        while (!line.empty() && (line.back() == '\r' || line.back() == ' ' || line.back() == '\t'))
            line.pop_back();
        std::size_t start = line.find_first_not_of(" \t");
        if (start == std::string::npos) continue;
        line = line.substr(start);
        if (line[0] == '#') continue;
        auto bar = line.find('|');
        if (bar == std::string::npos || line.find('|', bar + 1) != std::string::npos) {
            std::ostringstream os;
            os << "line " << lineno << ": expected exactly one '|' between the X and Z halves";
            throw std::invalid_argument(os.str());
        }
        std::size_t nx = bar, nz = line.size() - bar - 1;
        if (nx == 0 || nx != nz) {
            std::ostringstream os;
            os << "line " << lineno << ": X and Z halves must be nonempty and equal length";
            throw std::invalid_argument(os.str());
        }
        if (cm.rows() == 0) {
            cm.n = nx;
            cm.hx = BitMatrix(0, nx);
            cm.hz = BitMatrix(0, nx);
        } else if (nx != cm.n) {
            std::ostringstream os;
            os << "line " << lineno << ": row length differs from earlier rows";
            throw std::invalid_argument(os.str());
        }
        BitVec x(nx), z(nx);
        for (std::size_t q = 0; q < nx; ++q) {
            char cx = line[q], cz = line[bar + 1 + q];
            if ((cx != '0' && cx != '1') || (cz != '0' && cz != '1')) {
                std::ostringstream os;
                os << "line " << lineno << ": rows must consist of 0 and 1";
                throw std::invalid_argument(os.str());
            }
            x.set(q, cx == '1');
            z.set(q, cz == '1');
        }
        cm.hx.rows.push_back(x);
        cm.hz.rows.push_back(z);
    }
    if (cm.rows() == 0) throw std::invalid_argument("check matrix has no rows");
    return cm;
}

std::string format_check_matrix(const CheckMatrix& cm) {
    std::string out;
    for (std::size_t r = 0; r < cm.rows(); ++r) {
        out += cm.hx.rows[r].str();
        out += '|';
        out += cm.hz.rows[r].str();
        out += '\n';
    }
    return out;
}

CheckMatrix check_matrix_from_rows(std::size_t n, const std::vector<BitVec>& flat_rows) {
    CheckMatrix cm;
    cm.n = n;
    cm.hx = BitMatrix(0, n);
    cm.hz = BitMatrix(0, n);
    for (const auto& row : flat_rows) {
        if (row.size() != 2 * n) throw std::invalid_argument("flat row length must be 2n");
        BitVec x(n), z(n);
        for (std::size_t q = 0; q < n; ++q) {
            x.set(q, row.get(q));
            z.set(q, row.get(n + q));
        }
        cm.hx.rows.push_back(x);
        cm.hz.rows.push_back(z);
    }
    return cm;
}

void validate_check_matrix(const CheckMatrix& cm) {
    for (std::size_t a = 0; a < cm.rows(); ++a) {
        for (std::size_t b = a + 1; b < cm.rows(); ++b) {
            bool symp = cm.hx.rows[a].dot(cm.hz.rows[b]) ^ cm.hz.rows[a].dot(cm.hx.rows[b]);
            if (symp) {
                std::ostringstream os;
                os << "rows " << a << " and " << b << " anticommute";
                throw std::invalid_argument(os.str());
            }
        }
    }
    if (gf2_rank(cm.flat()) != cm.rows())
        throw std::invalid_argument("check matrix rows are not independent over GF(2)");
}

}  // namespace eacws
