#include "cayleynet/random.hpp"

#include <algorithm>
#include <numeric>

namespace cayleynet {

Graph random_connected_graph(std::size_t n, double p, Rng& rng) {
    GraphBuilder b(n);
    std::vector<Vertex> order(n);
    std::iota(order.begin(), order.end(), Vertex{0});
    std::shuffle(order.begin(), order.end(), rng);
    for (std::size_t i = 1; i < n; ++i) {
        std::uniform_int_distribution<std::size_t> pick(0, i - 1);
        b.add_edge(order[i], order[pick(rng)]);
    }
    std::bernoulli_distribution coin(p);
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            if (coin(rng)) b.add_edge(u, v);
    return std::move(b).build();
}

Graph random_graph(std::size_t n, double p, Rng& rng) {
    GraphBuilder b(n);
    std::bernoulli_distribution coin(p);
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            if (coin(rng)) b.add_edge(u, v);
    return std::move(b).build();
}

BinaryMatrix random_matrix(std::size_t r, std::size_t n, Rng& rng) {
    BinaryMatrix m(r, n);
    std::bernoulli_distribution coin(0.5);
    for (std::size_t j = 0; j < n; ++j) {
        bool nonzero = false;
        while (!nonzero) {
            for (std::size_t i = 0; i < r; ++i) {
                m.set(i, j, coin(rng));
                nonzero = nonzero || m.at(i, j);
            }
        }
    }
    return m;
}

}  // namespace cayleynet
