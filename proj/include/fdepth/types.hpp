#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace fdepth {

enum class Errc {
    mismatched_length,
    non_finite,
    too_few_curves,
    bad_grid,
    bad_indices,
    bad_j,
    part_too_small,
    not_factorizable,
    parse_error,
    bad_model_id,
    grid_mismatch,
    bad_config,
};

const char* errc_name(Errc code);

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

    Errc code() const { return code_; }

private:
    Errc code_;
};

// Ordered abscissae t_1 < ... < t_V in [0,1].
struct Grid {
    std::vector<double> points;

    size_t size() const { return points.size(); }
};

// t_k = k/V, k = 1..V.
Grid canonical_grid(size_t v);

// One value per grid point.
using Curve = std::vector<double>;

// n curves sharing one grid, stored row-major (n x V).
struct FunctionalSample {
    Grid grid;
    std::vector<std::string> ids;
    std::vector<double> values;
    size_t n = 0;

    size_t v() const { return grid.size(); }

    std::span<const double> curve(size_t i) const {
        return {values.data() + i * v(), v()};
    }

    double at(size_t i, size_t k) const { return values[i * v() + k]; }
    double& at(size_t i, size_t k) { return values[i * v() + k]; }
};

// Builds a sample from per-curve vectors; ids default to row indices.
FunctionalSample make_sample(Grid grid, const std::vector<Curve>& curves,
                             std::vector<std::string> ids = {});

// Throws unless every invariant holds; returns its argument for chaining.
const FunctionalSample& validate_sample(const FunctionalSample& sample);

// Per-grid-point membership bits, packed 64 per word.
class BandMask {
public:
    BandMask() = default;
    explicit BandMask(size_t size, bool fill = false)
        : words_((size + 63) / 64, fill ? ~uint64_t(0) : 0), size_(size) {
        trim_tail();
    }
    BandMask(std::vector<uint64_t> words, size_t size)
        : words_(std::move(words)), size_(size) {
        trim_tail();
    }

    size_t size() const { return size_; }
    bool test(size_t k) const { return (words_[k / 64] >> (k % 64)) & 1; }
    void set(size_t k, bool value) {
        uint64_t bit = uint64_t(1) << (k % 64);
        if (value)
            words_[k / 64] |= bit;
        else
            words_[k / 64] &= ~bit;
    }
    size_t count() const;
    std::span<const uint64_t> words() const { return words_; }

    bool operator==(const BandMask&) const = default;

private:
    void trim_tail() {
        if (size_ % 64 != 0 && !words_.empty())
            words_.back() &= (uint64_t(1) << (size_ % 64)) - 1;
    }

    std::vector<uint64_t> words_;
    size_t size_ = 0;
};

// Counting-measure proportion: (true bits)/V.
double measure(const BandMask& mask);

struct DepthMethod {
    enum class Family { bd, gbd, cbd, cgbd, gbd_in, gbd_out };

    Family family = Family::gbd;
    int j = 2;  // delimiters per band, bd/gbd only

    // Accepts the table labels: BD2, BD3, GBD, GBD2, GBD3, cBD, cGBD, GBD_I, GBD_O.
    static DepthMethod parse(const std::string& label);
    std::string label() const;

    bool operator==(const DepthMethod&) const = default;
};

// The seven methods in table-row order.
std::vector<DepthMethod> all_methods();

struct DepthVector {
    DepthMethod method;
    std::vector<double> values;
};

// Permutation of curve indices from deepest to least deep; equal depths
// ordered by ascending curve index.
struct RankOrder {
    std::vector<size_t> order;
    std::string ties_broken_by = "curve_index";
};

}  // namespace fdepth
