#include "lislab/matrix.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>

namespace lislab {

namespace {

void check_entry(Weight value, Weight bound) {
    if (value < 0 || value > bound) {
        throw InvalidInput("matrix entry " + std::to_string(value) + " outside {0,...," +
                           std::to_string(bound) + "}");
    }
}

}  // namespace

Matrix::Matrix(std::size_t n, Weight bound) : n_(n), bound_(bound), entries_(n * n, 0) {
    if (n < 1) throw InvalidInput("matrix dimension must be at least 1");
    if (bound < 1) throw InvalidInput("matrix entry bound M must be at least 1");
}

Matrix::Matrix(std::size_t n, Weight bound, std::vector<Weight> entries) : Matrix(n, bound) {
    if (entries.size() != n * n) {
        throw InvalidInput("expected " + std::to_string(n * n) + " matrix entries, got " +
                           std::to_string(entries.size()));
    }
    for (Weight e : entries) check_entry(e, bound);
    entries_ = std::move(entries);
}

Matrix Matrix::from_rows(Weight bound, const std::vector<std::vector<Weight>>& rows) {
    std::vector<Weight> flat;
    for (const auto& r : rows) {
        if (r.size() != rows.size()) throw InvalidInput("matrix rows must be square");
        flat.insert(flat.end(), r.begin(), r.end());
    }
    return Matrix(rows.size(), bound, std::move(flat));
}

Weight Matrix::at(std::size_t row, std::size_t col) const {
    if (row >= n_ || col >= n_) throw InvalidInput("matrix index out of range");
    return (*this)(row, col);
}

void Matrix::set(std::size_t row, std::size_t col, Weight value) {
    if (row >= n_ || col >= n_) throw InvalidInput("matrix index out of range");
    check_entry(value, bound_);
    entries_[row * n_ + col] = value;
}

std::vector<Weight> Matrix::column(std::size_t c) const {
    if (c >= n_) throw InvalidInput("matrix column out of range");
    std::vector<Weight> out(n_);
    for (std::size_t r = 0; r < n_; ++r) out[r] = (*this)(r, c);
    return out;
}

BitVector::BitVector(std::vector<std::uint8_t> bits) : bits_(std::move(bits)) {
    for (auto b : bits_) {
        if (b > 1) throw InvalidInput("bit vector element must be 0 or 1");
    }
}

Matrix maxplus_product(const Matrix& a, const Matrix& b) {
    if (a.size() != b.size()) {
        throw InvalidInput("maxplus_product: dimension mismatch " + std::to_string(a.size()) + " vs " +
                           std::to_string(b.size()));
    }
    const std::size_t n = a.size();
    Matrix c(n, checked_add(a.bound(), b.bound()));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            Weight best = 0;
            for (std::size_t k = 0; k < n; ++k) best = std::max(best, checked_add(a(i, k), b(k, j)));
            c.set(i, j, best);
        }
    }
    return c;
}

BitVector boolean_matvec(const Matrix& a, const BitVector& v) {
    if (!a.is_boolean()) throw InvalidInput("boolean_matvec: matrix is not Boolean (M != 1)");
    if (a.size() != v.size()) {
        throw InvalidInput("boolean_matvec: matrix has dimension " + std::to_string(a.size()) +
                           ", vector has length " + std::to_string(v.size()));
    }
    BitVector u(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        bool bit = false;
        for (std::size_t j = 0; j < a.size() && !bit; ++j) bit = a(i, j) == 1 && v[j];
        u.set(i, bit);
    }
    return u;
}

Matrix parse_matrix(std::istream& in) {
    long long n = 0;
    long long bound = 0;
    std::string header;
    if (!std::getline(in, header)) throw InvalidInput("matrix: missing \"n M\" header");
    {
        std::istringstream hs(header);
        std::string extra;
        if (!(hs >> n >> bound) || (hs >> extra)) {
            throw InvalidInput("matrix: header must be \"n M\", got \"" + header + "\"");
        }
    }
    if (n < 1) throw InvalidInput("matrix: n must be at least 1");
    if (bound < 1) throw InvalidInput("matrix: M must be at least 1");

    std::vector<Weight> entries;
    entries.reserve(static_cast<std::size_t>(n * n));
    std::string line;
    for (long long r = 0; r < n; ++r) {
        if (!std::getline(in, line)) {
            throw InvalidInput("matrix: expected " + std::to_string(n) + " rows, got " + std::to_string(r));
        }
        std::istringstream ls(line);
        long long value = 0;
        long long count = 0;
        while (ls >> value) {
            if (value < 0 || value > bound) {
                throw InvalidInput("matrix: row " + std::to_string(r) + " entry " + std::to_string(value) +
                                   " outside {0,...," + std::to_string(bound) + "}");
            }
            entries.push_back(value);
            ++count;
        }
        if (!ls.eof() || count != n) {
            throw InvalidInput("matrix: row " + std::to_string(r) + " must hold " + std::to_string(n) +
                               " integers");
        }
    }
    return Matrix(static_cast<std::size_t>(n), bound, std::move(entries));
}

Matrix parse_matrix(const std::string& text) {
    std::istringstream in(text);
    return parse_matrix(in);
}

void write_matrix(std::ostream& out, const Matrix& m) {
    out << m.size() << ' ' << m.bound() << '\n';
    for (std::size_t r = 0; r < m.size(); ++r) {
        for (std::size_t c = 0; c < m.size(); ++c) {
            if (c) out << ' ';
            out << m(r, c);
        }
        out << '\n';
    }
}

std::string format_matrix(const Matrix& m) {
    std::ostringstream out;
    write_matrix(out, m);
    return out.str();
}

BitVector parse_bitvector(const std::string& line) {
    std::istringstream ls(line);
    std::vector<std::uint8_t> bits;
    std::string tok;
    while (ls >> tok) {
        if (tok == "0") {
            bits.push_back(0);
        } else if (tok == "1") {
            bits.push_back(1);
        } else {
            throw InvalidInput("bit vector: \"" + tok + "\" is not 0 or 1");
        }
    }
    return BitVector(std::move(bits));
}

std::string format_bitvector(const BitVector& v) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += ' ';
        out += v[i] ? '1' : '0';
    }
    return out;
}

}  // namespace lislab
