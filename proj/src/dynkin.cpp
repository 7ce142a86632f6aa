#include <adehilb/dynkin.hpp>

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace adehilb {

std::string SingularityType::str() const {
    const char f = family == Family::A ? 'A' : family == Family::D ? 'D' : 'E';
    return std::string(1, f) + std::to_string(n);
}

SingularityType make_type(char family, int n) {
    switch (family) {
    case 'A':
        if (n < 1) throw std::invalid_argument("A_n requires n >= 1");
        return {Family::A, n};
    case 'D':
        if (n < 4) throw std::invalid_argument("D_n requires n >= 4");
        return {Family::D, n};
    case 'E':
        if (n < 6 || n > 8) throw std::invalid_argument("E_n requires n in {6,7,8}");
        return {Family::E, n};
    default:
        throw std::invalid_argument("unknown family");
    }
}

std::vector<long> ClassGroup::add(std::vector<long> a, const std::vector<long>& b) const {
    for (std::size_t i = 0; i < moduli.size(); ++i) a[i] = ((a[i] + b[i]) % moduli[i] + moduli[i]) % moduli[i];
    return a;
}

std::vector<long> ClassGroup::neg(std::vector<long> a) const {
    for (std::size_t i = 0; i < moduli.size(); ++i) a[i] = (moduli[i] - a[i] % moduli[i]) % moduli[i];
    return a;
}

std::vector<long> ClassGroup::scale(long k, std::vector<long> a) const {
    for (std::size_t i = 0; i < moduli.size(); ++i) a[i] = ((a[i] * k) % moduli[i] + moduli[i]) % moduli[i];
    return a;
}

bool ClassGroup::is_zero(const std::vector<long>& a) const {
    for (std::size_t i = 0; i < moduli.size(); ++i)
        if (a[i] % moduli[i] != 0) return false;
    return true;
}

std::string ClassGroup::str() const {
    if (moduli.empty()) return "trivial";
    std::ostringstream os;
    for (std::size_t i = 0; i < moduli.size(); ++i) {
        if (i) os << " x ";
        os << "Z/" << moduli[i];
    }
    return os.str();
}

long ModuleSum::total_rank() const {
    long r = free_rank;
    for (std::size_t i = 0; i < multiplicities.size(); ++i)
        r += multiplicities[i] * module_rank(type, static_cast<int>(i) + 1);
    return r;
}

bool ModuleSum::non_free_empty() const {
    for (long m : multiplicities)
        if (m != 0) return false;
    return true;
}

std::string ModuleSum::str() const {
    std::ostringstream os;
    os << free_rank << ";";
    for (std::size_t i = 0; i < multiplicities.size(); ++i) {
        if (i) os << ",";
        os << multiplicities[i];
    }
    return os.str();
}

ModuleSum parse_module_sum(const SingularityType& t, const std::string& text) {
    auto semi = text.find(';');
    if (semi == std::string::npos)
        throw std::invalid_argument("module sum: expected \"free;a1,...,an\"");
    ModuleSum s;
    s.type = t;
    s.free_rank = std::stol(text.substr(0, semi));
    if (s.free_rank < 0) throw std::invalid_argument("module sum: negative free rank");
    std::string rest = text.substr(semi + 1);
    std::istringstream is(rest);
    std::string tok;
    while (std::getline(is, tok, ',')) {
        long v = std::stol(tok);
        if (v < 0) throw std::invalid_argument("module sum: negative multiplicity");
        s.multiplicities.push_back(v);
    }
    if (static_cast<int>(s.multiplicities.size()) != t.n)
        throw std::invalid_argument("module sum: expected " + std::to_string(t.n) +
                                    " multiplicities");
    return s;
}

std::vector<int> DynkinData::extended_adjacency(int i) const {
    std::vector<int> out = adjacency.at(i);
    for (int v : extended_neighbors)
        if (v == i) out.push_back(0);
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

DynkinData build(const SingularityType& t) {
    DynkinData d;
    d.type = t;
    d.n = t.n;
    const int n = t.n;
    d.adjacency.assign(n + 1, {});
    auto edge = [&](int a, int b) {
        d.adjacency[a].push_back(b);
        d.adjacency[b].push_back(a);
    };
    d.ranks.assign(n + 1, 0);
    d.duals.assign(n + 1, 0);
    d.det_class.assign(n + 1, {});

    switch (t.family) {
    case Family::A: {
        for (int v = 1; v < n; ++v) edge(v, v + 1);
        if (n == 1) d.extended_neighbors = {1, 1};  // double edge of the affine A_1
        else d.extended_neighbors = {1, n};
        for (int v = 1; v <= n; ++v) {
            d.ranks[v] = 1;
            d.duals[v] = n + 1 - v;
        }
        d.class_group.moduli = {n + 1};
        for (int v = 1; v <= n; ++v) d.det_class[v] = {v};
        break;
    }
    case Family::D: {
        for (int v = 1; v < n - 2; ++v) edge(v, v + 1);
        edge(n - 2, n - 1);
        edge(n - 2, n);
        d.extended_neighbors = {2};
        for (int v = 1; v <= n; ++v) d.ranks[v] = 2;
        d.ranks[1] = d.ranks[n - 1] = d.ranks[n] = 1;
        for (int v = 1; v <= n; ++v) d.duals[v] = v;
        if (n % 2 == 1) std::swap(d.duals[n - 1], d.duals[n]);
        if (n % 2 == 0) {
            // Cl = Z/2 x Z/2; odd chain vertices share one nonzero class, the
            // two fork ends carry the other two. Swapping the fork classes is a
            // class-group automorphism fixing every admissibility verdict.
            d.class_group.moduli = {2, 2};
            for (int v = 1; v <= n - 2; ++v)
                d.det_class[v] = (v % 2 == 1) ? std::vector<long>{0, 1}
                                              : std::vector<long>{0, 0};
            d.det_class[n - 1] = {1, 0};
            d.det_class[n] = {1, 1};
        } else {
            // Cl = Z/4; the x -> -x automorphism swaps the fork assignment.
            d.class_group.moduli = {4};
            for (int v = 1; v <= n - 2; ++v)
                d.det_class[v] = (v % 2 == 1) ? std::vector<long>{2}
                                              : std::vector<long>{0};
            d.det_class[n - 1] = {1};
            d.det_class[n] = {3};
        }
        break;
    }
    case Family::E: {
        if (n == 6) {
            edge(1, 2); edge(2, 3); edge(3, 5); edge(5, 6); edge(3, 4);
            d.extended_neighbors = {4};
            d.ranks = {0, 1, 2, 3, 2, 2, 1};
            d.duals = {0, 6, 5, 3, 4, 2, 1};
            d.class_group.moduli = {3};
            d.det_class = {{}, {1}, {2}, {0}, {0}, {1}, {2}};
        } else if (n == 7) {
            edge(1, 2); edge(2, 4); edge(4, 5); edge(5, 6); edge(6, 7); edge(3, 4);
            d.extended_neighbors = {1};
            d.ranks = {0, 2, 3, 2, 4, 3, 2, 1};
            for (int v = 1; v <= 7; ++v) d.duals[v] = v;
            d.class_group.moduli = {2};
            d.det_class = {{}, {0}, {0}, {1}, {0}, {1}, {0}, {1}};
        } else {
            edge(1, 2); edge(2, 3); edge(3, 4); edge(4, 5); edge(5, 6); edge(5, 7); edge(7, 8);
            d.extended_neighbors = {1};
            d.ranks = {0, 2, 3, 4, 5, 6, 3, 4, 2};
            for (int v = 1; v <= 8; ++v) d.duals[v] = v;
            d.class_group.moduli = {};
            for (int v = 1; v <= 8; ++v) d.det_class[v] = {};
        }
        break;
    }
    }
    for (int v = 1; v <= n; ++v) std::sort(d.adjacency[v].begin(), d.adjacency[v].end());
    std::sort(d.extended_neighbors.begin(), d.extended_neighbors.end());
    return d;
}

} // namespace

const DynkinData& diagram(const SingularityType& t) {
    static std::map<std::pair<int, int>, DynkinData> cache;
    auto key = std::make_pair(static_cast<int>(t.family), t.n);
    auto it = cache.find(key);
    if (it == cache.end()) it = cache.emplace(key, build(t)).first;
    return it->second;
}

int dual(const SingularityType& t, int i) {
    const DynkinData& d = diagram(t);
    if (i < 1 || i > d.n) throw std::out_of_range("dual: vertex out of range");
    return d.duals[i];
}

int module_rank(const SingularityType& t, int i) {
    const DynkinData& d = diagram(t);
    if (i < 1 || i > d.n) throw std::out_of_range("module_rank: vertex out of range");
    return d.ranks[i];
}

ModuleSum ar_middle(const SingularityType& t, int i) {
    const DynkinData& d = diagram(t);
    if (i < 1 || i > d.n) throw std::out_of_range("ar_middle: vertex out of range");
    ModuleSum s;
    s.type = t;
    s.multiplicities.assign(d.n, 0);
    for (int v : d.extended_adjacency(i)) {
        if (v == 0) ++s.free_rank;
        else ++s.multiplicities[v - 1];
    }
    return s;
}

std::vector<long> det_class(const ModuleSum& s) {
    const DynkinData& d = diagram(s.type);
    std::vector<long> acc = d.class_group.zero();
    for (std::size_t i = 0; i < s.multiplicities.size(); ++i)
        acc = d.class_group.add(acc,
                                d.class_group.scale(s.multiplicities[i], d.det_class[i + 1]));
    return acc;
}

bool is_admissible(const ModuleSum& s) {
    return diagram(s.type).class_group.is_zero(det_class(s));
}

} // namespace adehilb
