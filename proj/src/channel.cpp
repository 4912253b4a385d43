#include "zecap/channel.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "zecap/cliques.hpp"

namespace zecap {

std::string rat_str(const Rat& r) {
    std::ostringstream os;
    os << r.numerator();
    if (r.denominator() != 1) os << "/" << r.denominator();
    return os.str();
}

Rat rat_parse(const std::string& s) {
    auto slash = s.find('/');
    if (slash == std::string::npos) return Rat(std::stoll(s));
    return Rat(std::stoll(s.substr(0, slash)), std::stoll(s.substr(slash + 1)));
}

Channel::Channel(std::vector<std::string> in, std::vector<std::string> out,
                 std::vector<std::vector<Rat>> p)
    : inputs(std::move(in)), outputs(std::move(out)), probs(std::move(p)) {
    check_valid();
}

void Channel::check_valid() const {
    if (inputs.empty() || outputs.empty()) throw std::invalid_argument("Channel: empty alphabet");
    if (probs.size() != inputs.size()) throw std::invalid_argument("Channel: row count mismatch");
    for (const auto& row : probs) {
        if (row.size() != outputs.size()) throw std::invalid_argument("Channel: column count mismatch");
        Rat sum(0);
        for (const Rat& p : row) {
            if (p < Rat(0)) throw std::invalid_argument("Channel: negative probability");
            sum += p;
        }
        if (sum != Rat(1)) throw std::invalid_argument("Channel: row does not sum to 1");
    }
}

Channel identity_channel(int n) {
    std::vector<std::string> sym;
    for (int i = 0; i < n; ++i) sym.push_back("s" + std::to_string(i));
    std::vector<std::vector<Rat>> p(size_t(n), std::vector<Rat>(size_t(n), Rat(0)));
    for (int i = 0; i < n; ++i) p[size_t(i)][size_t(i)] = Rat(1);
    return Channel(sym, sym, std::move(p));
}

Channel noisy_cycle_channel(int n) {
    std::vector<std::string> sym;
    for (int i = 0; i < n; ++i) sym.push_back("s" + std::to_string(i));
    std::vector<std::vector<Rat>> p(size_t(n), std::vector<Rat>(size_t(n), Rat(0)));
    for (int i = 0; i < n; ++i) {
        p[size_t(i)][size_t(i)] = Rat(1, 2);
        p[size_t(i)][size_t((i + 1) % n)] = Rat(1, 2);
    }
    return Channel(sym, sym, std::move(p));
}

Graph confusability_graph(const Channel& n) {
    Graph g(int(n.inputs.size()), n.inputs);
    for (size_t x1 = 0; x1 < n.inputs.size(); ++x1)
        for (size_t x2 = x1 + 1; x2 < n.inputs.size(); ++x2) {
            for (size_t y = 0; y < n.outputs.size(); ++y)
                if (n.probs[x1][y] > Rat(0) && n.probs[x2][y] > Rat(0)) {
                    g.add_edge(int(x1), int(x2));
                    break;
                }
        }
    return g;
}

Channel tensor_channels(const Channel& n1, const Channel& n2) {
    std::vector<std::string> in, out;
    for (const auto& a : n1.inputs)
        for (const auto& b : n2.inputs) in.push_back("(" + a + "," + b + ")");
    for (const auto& a : n1.outputs)
        for (const auto& b : n2.outputs) out.push_back("(" + a + "," + b + ")");
    std::vector<std::vector<Rat>> p(in.size(), std::vector<Rat>(out.size(), Rat(0)));
    for (size_t x1 = 0; x1 < n1.inputs.size(); ++x1)
        for (size_t x2 = 0; x2 < n2.inputs.size(); ++x2)
            for (size_t y1 = 0; y1 < n1.outputs.size(); ++y1)
                for (size_t y2 = 0; y2 < n2.outputs.size(); ++y2)
                    p[x1 * n2.inputs.size() + x2][y1 * n2.outputs.size() + y2] =
                        n1.probs[x1][y1] * n2.probs[x2][y2];
    return Channel(std::move(in), std::move(out), std::move(p));
}

CliqueChannel channel_from_cliques(const Graph& g, int d) {
    auto cliques = cliques_of_size(g, d);
    if (cliques.empty()) throw std::invalid_argument("channel_from_cliques: no cliques of size d");

    std::vector<long long> per_vertex(size_t(g.n), 0);
    for (const auto& c : cliques)
        for (int v : c) ++per_vertex[size_t(v)];
    long long m = per_vertex[0];
    for (int v = 0; v < g.n; ++v) {
        if (per_vertex[size_t(v)] == 0)
            throw std::invalid_argument("channel_from_cliques: vertex " + std::to_string(v) +
                                        " lies in no clique of size d");
        if (per_vertex[size_t(v)] != m)
            throw std::invalid_argument(
                "channel_from_cliques: clique incidence is not regular (vertex-transitivity "
                "assumption fails)");
    }

    std::vector<std::string> outputs;
    for (const auto& c : cliques) {
        std::string lab = "{";
        for (size_t i = 0; i < c.size(); ++i)
            lab += (i ? "|" : "") + g.labels[size_t(c[size_t(i)])];
        lab += "}";
        outputs.push_back(std::move(lab));
    }

    std::vector<std::vector<Rat>> p(size_t(g.n), std::vector<Rat>(cliques.size(), Rat(0)));
    for (size_t y = 0; y < cliques.size(); ++y)
        for (int v : cliques[y]) p[size_t(v)][y] = Rat(1, m);

    CliqueChannel cc{Channel(g.labels, std::move(outputs), std::move(p)), {}};
    cc.report.num_outputs = (long long)cliques.size();
    cc.report.cliques_per_vertex = m;
    cc.report.double_count_ok = ((long long)cliques.size() * d == (long long)g.n * m);
    cc.report.capacity_log2 = std::log2(double(g.n) / double(d));
    cc.report.cliques = std::move(cliques);
    return cc;
}

BaCapacityError::BaCapacityError(double lo, double hi)
    : std::runtime_error("blahut_arimoto: iteration limit reached; capacity bracket [" +
                         std::to_string(lo) + ", " + std::to_string(hi) + "] bits"),
      lower_bits(lo),
      upper_bits(hi) {}

BaResult blahut_arimoto(const Channel& n, double tol, int max_iter) {
    if (tol <= 0) throw std::invalid_argument("blahut_arimoto: tol must be positive");
    size_t nx = n.inputs.size(), ny = n.outputs.size();
    std::vector<std::vector<double>> w(nx, std::vector<double>(ny));
    for (size_t x = 0; x < nx; ++x)
        for (size_t y = 0; y < ny; ++y) w[x][y] = boost::rational_cast<double>(n.probs[x][y]);

    std::vector<double> p(nx, 1.0 / double(nx));
    std::vector<double> r(ny), d(nx);
    BaResult res;
    const double ln2 = std::log(2.0);

    for (int it = 1; it <= max_iter; ++it) {
        for (size_t y = 0; y < ny; ++y) {
            double s = 0;
            for (size_t x = 0; x < nx; ++x) s += p[x] * w[x][y];
            r[y] = s;
        }
        double up = -1e300;
        for (size_t x = 0; x < nx; ++x) {
            double s = 0;
            for (size_t y = 0; y < ny; ++y)
                if (w[x][y] > 0) s += w[x][y] * std::log(w[x][y] / r[y]);
            d[x] = s;
            up = std::max(up, s);
        }
        double z = 0;
        for (size_t x = 0; x < nx; ++x) z += p[x] * std::exp(d[x]);
        double low = std::log(z);

        res.iterations = it;
        res.capacity_bits = low / ln2;
        res.upper_bits = up / ln2;
        res.lower_history.push_back(res.capacity_bits);
        if (res.upper_bits - res.capacity_bits <= tol) return res;

        for (size_t x = 0; x < nx; ++x) p[x] = p[x] * std::exp(d[x]) / z;
    }
    throw BaCapacityError(res.capacity_bits, res.upper_bits);
}

nlohmann::json channel_to_json(const Channel& c) {
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& row : c.probs) {
        nlohmann::json r = nlohmann::json::array();
        for (const Rat& p : row) r.push_back(rat_str(p));
        rows.push_back(r);
    }
    return {{"inputs", c.inputs}, {"outputs", c.outputs}, {"probs", rows}};
}

Channel channel_from_json(const nlohmann::json& j) {
    std::vector<std::vector<Rat>> probs;
    for (const auto& row : j.at("probs")) {
        std::vector<Rat> r;
        for (const auto& p : row) r.push_back(rat_parse(p.get<std::string>()));
        probs.push_back(std::move(r));
    }
    return Channel(j.at("inputs").get<std::vector<std::string>>(),
                   j.at("outputs").get<std::vector<std::string>>(), std::move(probs));
}

std::string channel_to_csv(const Channel& c) {
    std::ostringstream os;
    os << "input";
    for (const auto& y : c.outputs) os << "," << y;
    os << "\n";
    for (size_t x = 0; x < c.inputs.size(); ++x) {
        os << c.inputs[x];
        for (const Rat& p : c.probs[x]) os << "," << rat_str(p);
        os << "\n";
    }
    return os.str();
}

}  // namespace zecap
