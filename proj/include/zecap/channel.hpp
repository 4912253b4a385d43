#pragma once

#include <boost/rational.hpp>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"
#include "zecap/graph.hpp"

namespace zecap {

using Rat = boost::rational<long long>;

std::string rat_str(const Rat& r);
Rat rat_parse(const std::string& s);  // "a/b" or "a"

// Discrete memoryless channel with exact rational probabilities; every row of
// probs sums to exactly 1.
struct Channel {
    std::vector<std::string> inputs;
    std::vector<std::string> outputs;
    std::vector<std::vector<Rat>> probs;  // |X| x |Y|

    Channel() = default;
    Channel(std::vector<std::string> in, std::vector<std::string> out,
            std::vector<std::vector<Rat>> p);
    void check_valid() const;
};

Channel identity_channel(int n);
// N(y|x) > 0 exactly for y in {x, x+1 mod n}; confusability graph is C_n.
Channel noisy_cycle_channel(int n);

Graph confusability_graph(const Channel& n);
Channel tensor_channels(const Channel& n1, const Channel& n2);

// Clique channel: X = V(G), Y = all d-cliques, N(y|x) uniform over the
// cliques containing x. Requires every vertex to lie in the same number m of
// cliques; otherwise throws.
struct CliqueChannelReport {
    long long num_outputs = 0;       // |Y|
    long long cliques_per_vertex = 0;  // m
    bool double_count_ok = false;    // |Y| d == |X| m, exact
    double capacity_log2 = 0.0;      // log2(|X|/d)
    std::vector<std::vector<int>> cliques;
};
struct CliqueChannel {
    Channel channel;
    CliqueChannelReport report;
};
CliqueChannel channel_from_cliques(const Graph& g, int d);

struct BaCapacityError : std::runtime_error {
    double lower_bits, upper_bits;
    BaCapacityError(double lo, double hi);
};

// Blahut-Arimoto capacity in bits: alternating maximization from the uniform
// input, monotone lower bounds, terminates when upper-lower <= tol (bits).
struct BaResult {
    double capacity_bits = 0.0;  // final lower bound
    double upper_bits = 0.0;
    int iterations = 0;
    std::vector<double> lower_history;
};
BaResult blahut_arimoto(const Channel& n, double tol, int max_iter = 100000);

nlohmann::json channel_to_json(const Channel& c);
Channel channel_from_json(const nlohmann::json& j);
std::string channel_to_csv(const Channel& c);

}  // namespace zecap
