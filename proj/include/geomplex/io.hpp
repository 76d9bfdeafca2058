#pragma once

#include <iosfwd>
#include <string>

#include "geomplex/dissimilarity.hpp"
#include "geomplex/filtered_complex.hpp"
#include "geomplex/persistence.hpp"

namespace geomplex {

// Shortest round-trip decimal form; infinities render as "inf" / "-inf".
std::string format_double(double v);
double parse_double(const std::string& token);

// Dissimilarity matrix file: '#' comment lines, a "dist n" header, then n
// rows of n whitespace-separated values.
DissimilarityMatrix load_dissimilarity(std::istream& in);
void save_dissimilarity(std::ostream& out, const DissimilarityMatrix& m);

// Cross-dissimilarity file: "dowker m n" header, then m rows of n values.
CrossDissimilarity load_cross_dissimilarity(std::istream& in);
void save_cross_dissimilarity(std::ostream& out, const CrossDissimilarity& lam);

// Point cloud file: CSV, one point per row, no header.
std::vector<std::vector<double>> load_point_cloud_csv(std::istream& in);
void save_point_cloud_csv(std::ostream& out, const PointCloud& pc);

// Correspondence file: lines "i j".
Correspondence load_correspondence(std::istream& in, int left_size, int right_size);
void save_correspondence(std::ostream& out, const Correspondence& c);

// Filtered complex export: lines "dim v0 v1 ... vk value", sorted by
// (value, dim, lexicographic vertices).
void save_complex(std::ostream& out, const FilteredComplex& K);

// Diagram files: TSV lines "dim birth death" (death "inf" for +infinity)
// and a JSON mirror [{"dim":..,"birth":..,"death":..}, ...] where infinite
// values are encoded as strings.
void save_diagram_tsv(std::ostream& out, const PersistenceDiagram& dgm);
PersistenceDiagram load_diagram_tsv(std::istream& in);
std::string diagram_to_json(const PersistenceDiagram& dgm);
PersistenceDiagram diagram_from_json(const std::string& text);

// Convenience file wrappers (throw ParseError / ValidationError on failure).
DissimilarityMatrix load_dissimilarity_file(const std::string& path);
CrossDissimilarity load_cross_dissimilarity_file(const std::string& path);
std::vector<std::vector<double>> load_point_cloud_file(const std::string& path);
PersistenceDiagram load_diagram_file(const std::string& path);  // by extension: .json or TSV
void write_text_file(const std::string& path, const std::string& content);

}  // namespace geomplex
