#pragma once

#include <cmath>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "semamap/errors.hpp"
#include "semamap/grid.hpp"
#include "semamap/rng.hpp"

namespace semamap {

/**
 * @brief The two-sheet network: a domain (input) sheet fully connected to an
 *        image (output) sheet.
 *
 * weights holds one row per image neuron (row-major over the image grid),
 * each row being that neuron's incoming connection vector of length
 * domain_shape.neuron_count(). Plain value type; copy and move freely.
 */
struct SomNetwork {
    GridShape domain_shape;
    GridShape image_shape;
    std::vector<double> weights; ///< image_neurons x domain_neurons, row-major

    std::size_t domain_size() const { return domain_shape.neuron_count(); }
    std::size_t image_size() const { return image_shape.neuron_count(); }

    std::span<const double> row(std::size_t image_index) const {
        const std::size_t n = domain_size();
        return std::span<const double>(weights.data() + image_index * n, n);
    }
    std::span<double> row(std::size_t image_index) {
        const std::size_t n = domain_size();
        return std::span<double>(weights.data() + image_index * n, n);
    }
};

/**
 * @brief Create a randomly connected network.
 *
 * Every weight is drawn independently uniform from [0, 1). The same seed
 * always reproduces the same matrix.
 */
inline SomNetwork init_network(GridShape domain_shape, GridShape image_shape, std::uint64_t seed) {
    require_valid_shape(domain_shape, "init_network(domain)");
    require_valid_shape(image_shape, "init_network(image)");

    SomNetwork net{domain_shape, image_shape, {}};
    net.weights.resize(net.image_size() * net.domain_size());
    Rng rng(seed);
    for (double& w : net.weights) {
        w = canonical(rng);
    }
    return net;
}

inline void require_input_dimension(const SomNetwork& net, std::span<const double> input, const char* what) {
    if (input.size() != net.domain_size()) {
        throw dimension_error(std::string(what) + ": input length " + std::to_string(input.size()) +
                              " does not match domain neuron count " + std::to_string(net.domain_size()));
    }
}

inline void require_finite(std::span<const double> values, const char* what) {
    for (double v : values) {
        if (!std::isfinite(v)) {
            throw invalid_input_error(std::string(what) + ": input contains a non-finite value");
        }
    }
}

} // namespace semamap
