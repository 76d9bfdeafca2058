#include "geomplex/io.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>

#include <json.hpp>

namespace geomplex {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Next non-comment, non-blank line.
bool next_content_line(std::istream& in, std::string& line) {
    while (std::getline(in, line)) {
        std::size_t pos = line.find_first_not_of(" \t\r\n");
        if (pos == std::string::npos) continue;
        if (line[pos] == '#') continue;
        return true;
    }
    return false;
}

std::vector<std::string> split_ws(const std::string& line) {
    std::istringstream ss(line);
    std::vector<std::string> out;
    std::string tok;
    while (ss >> tok) out.push_back(tok);
    return out;
}

std::vector<double> read_values(std::istream& in, std::size_t count, const char* what) {
    std::vector<double> vals;
    vals.reserve(count);
    std::string line;
    while (vals.size() < count && next_content_line(in, line))
        for (const auto& tok : split_ws(line)) vals.push_back(parse_double(tok));
    if (vals.size() != count)
        throw ParseError(std::string(what) + ": expected " + std::to_string(count) + " values, got " +
                         std::to_string(vals.size()));
    return vals;
}

}  // namespace

std::string format_double(double v) {
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    char buf[64];
    auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, end);
}

double parse_double(const std::string& token) {
    if (token == "inf" || token == "+inf") return kInf;
    if (token == "-inf") return -kInf;
    double v = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
    if (ec != std::errc() || ptr != token.data() + token.size())
        throw ParseError("bad numeric token: '" + token + "'");
    return v;
}

DissimilarityMatrix load_dissimilarity(std::istream& in) {
    std::string line;
    if (!next_content_line(in, line)) throw ParseError("empty dissimilarity file");
    auto toks = split_ws(line);
    if (toks.size() != 2 || toks[0] != "dist") throw ParseError("expected header 'dist n'");
    int n = 0;
    try {
        n = std::stoi(toks[1]);
    } catch (...) {
        throw ParseError("bad point count in 'dist' header");
    }
    if (n <= 0) throw ParseError("bad point count in 'dist' header");
    auto vals = read_values(in, static_cast<std::size_t>(n) * n, "dissimilarity matrix");
    return DissimilarityMatrix::from_entries(n, std::move(vals));
}

void save_dissimilarity(std::ostream& out, const DissimilarityMatrix& m) {
    out << "dist " << m.n << "\n";
    for (int i = 0; i < m.n; ++i) {
        for (int j = 0; j < m.n; ++j) out << (j ? " " : "") << format_double(m(i, j));
        out << "\n";
    }
}

CrossDissimilarity load_cross_dissimilarity(std::istream& in) {
    std::string line;
    if (!next_content_line(in, line)) throw ParseError("empty cross-dissimilarity file");
    auto toks = split_ws(line);
    if (toks.size() != 3 || toks[0] != "dowker") throw ParseError("expected header 'dowker m n'");
    int m = 0, n = 0;
    try {
        m = std::stoi(toks[1]);
        n = std::stoi(toks[2]);
    } catch (...) {
        throw ParseError("bad sizes in 'dowker' header");
    }
    if (m <= 0 || n <= 0) throw ParseError("bad sizes in 'dowker' header");
    auto vals = read_values(in, static_cast<std::size_t>(m) * n, "cross-dissimilarity");
    return CrossDissimilarity::from_entries(m, n, std::move(vals));
}

void save_cross_dissimilarity(std::ostream& out, const CrossDissimilarity& lam) {
    out << "dowker " << lam.m << " " << lam.n << "\n";
    for (int l = 0; l < lam.m; ++l) {
        for (int w = 0; w < lam.n; ++w) out << (w ? " " : "") << format_double(lam(l, w));
        out << "\n";
    }
}

std::vector<std::vector<double>> load_point_cloud_csv(std::istream& in) {
    std::vector<std::vector<double>> points;
    std::string line;
    while (next_content_line(in, line)) {
        std::vector<double> row;
        std::string cell;
        std::istringstream ss(line);
        while (std::getline(ss, cell, ',')) {
            std::size_t b = cell.find_first_not_of(" \t\r");
            std::size_t e = cell.find_last_not_of(" \t\r");
            if (b == std::string::npos) throw ParseError("empty CSV cell");
            row.push_back(parse_double(cell.substr(b, e - b + 1)));
        }
        if (row.empty()) throw ParseError("empty CSV row");
        points.push_back(std::move(row));
    }
    if (points.empty()) throw ParseError("empty point cloud file");
    return points;
}

void save_point_cloud_csv(std::ostream& out, const PointCloud& pc) {
    for (const auto& p : pc.points) {
        for (std::size_t k = 0; k < p.size(); ++k) out << (k ? "," : "") << format_double(p[k]);
        out << "\n";
    }
}

Correspondence load_correspondence(std::istream& in, int left_size, int right_size) {
    std::vector<std::pair<int, int>> pairs;
    std::string line;
    while (next_content_line(in, line)) {
        auto toks = split_ws(line);
        if (toks.size() != 2) throw ParseError("correspondence lines must be 'i j'");
        try {
            pairs.emplace_back(std::stoi(toks[0]), std::stoi(toks[1]));
        } catch (...) {
            throw ParseError("bad correspondence pair: '" + line + "'");
        }
    }
    return Correspondence::from_pairs(left_size, right_size, std::move(pairs));
}

void save_correspondence(std::ostream& out, const Correspondence& c) {
    for (auto [i, j] : c.pairs) out << i << " " << j << "\n";
}

void save_complex(std::ostream& out, const FilteredComplex& K) {
    auto simplices = K.simplices;
    std::sort(simplices.begin(), simplices.end(), simplex_less);
    for (const auto& s : simplices) {
        out << s.dim();
        for (int v : s.vertices) out << " " << v;
        out << " " << format_double(s.value) << "\n";
    }
}

void save_diagram_tsv(std::ostream& out, const PersistenceDiagram& dgm) {
    auto sorted = dgm;
    sorted.sort_canonical();
    for (const auto& pt : sorted.points)
        out << pt.dim << "\t" << format_double(pt.birth) << "\t" << format_double(pt.death) << "\n";
}

PersistenceDiagram load_diagram_tsv(std::istream& in) {
    PersistenceDiagram dgm;
    std::string line;
    while (next_content_line(in, line)) {
        auto toks = split_ws(line);
        if (toks.size() != 3) throw ParseError("diagram lines must be 'dim birth death'");
        DiagramPoint pt;
        try {
            pt.dim = std::stoi(toks[0]);
        } catch (...) {
            throw ParseError("bad dimension in diagram line");
        }
        pt.birth = parse_double(toks[1]);
        pt.death = parse_double(toks[2]);
        dgm.points.push_back(pt);
    }
    return dgm;
}

namespace {

nlohmann::json coord_to_json(double v) {
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    return v;
}

double coord_from_json(const nlohmann::json& j) {
    if (j.is_string()) return parse_double(j.get<std::string>());
    return j.get<double>();
}

}  // namespace

std::string diagram_to_json(const PersistenceDiagram& dgm) {
    auto sorted = dgm;
    sorted.sort_canonical();
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& pt : sorted.points)
        arr.push_back({{"dim", pt.dim}, {"birth", coord_to_json(pt.birth)}, {"death", coord_to_json(pt.death)}});
    return arr.dump();
}

PersistenceDiagram diagram_from_json(const std::string& text) {
    PersistenceDiagram dgm;
    nlohmann::json arr;
    try {
        arr = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("bad diagram JSON: ") + e.what());
    }
    if (!arr.is_array()) throw ParseError("diagram JSON must be an array");
    for (const auto& item : arr)
        dgm.points.push_back(
            {item.at("dim").get<int>(), coord_from_json(item.at("birth")), coord_from_json(item.at("death"))});
    return dgm;
}

namespace {

std::ifstream open_input(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open file: " + path);
    return in;
}

}  // namespace

DissimilarityMatrix load_dissimilarity_file(const std::string& path) {
    auto in = open_input(path);
    return load_dissimilarity(in);
}

CrossDissimilarity load_cross_dissimilarity_file(const std::string& path) {
    auto in = open_input(path);
    return load_cross_dissimilarity(in);
}

std::vector<std::vector<double>> load_point_cloud_file(const std::string& path) {
    auto in = open_input(path);
    return load_point_cloud_csv(in);
}

PersistenceDiagram load_diagram_file(const std::string& path) {
    auto in = open_input(path);
    if (path.size() >= 5 && path.substr(path.size() - 5) == ".json") {
        std::ostringstream ss;
        ss << in.rdbuf();
        return diagram_from_json(ss.str());
    }
    return load_diagram_tsv(in);
}

void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream out(path);
    if (!out) throw ParseError("cannot open file for writing: " + path);
    out << content;
}

}  // namespace geomplex
