#pragma once

#include <filesystem>
#include <string>
#include <utility>
#include <vector>

#include "rap/scalar.hpp"

namespace rap {

/// Distinct values of a sequence and the edges between consecutive ones.
struct PlaneGraph {
    std::vector<ComplexF> vertices;
    /// Undirected, i < j, in order of first traversal.
    std::vector<std::pair<int, int>> edges;
};

/// Vertices within dedup_tol (in both coordinates) are identified.
PlaneGraph psum_graph(const std::vector<ComplexF>& seq, double dedup_tol = 1e-7);
/// Exact values are deduplicated exactly before conversion.
PlaneGraph psum_graph(const std::vector<Cyclo>& seq);

struct RenderSpec {
    int width = 400;
    int height = 400;
    double margin = 0.08;  ///< fraction of the smaller side
    double vertex_radius = 4;
    double stroke_width = 1.5;
    bool axes = true;
};

/// SVG 1.1 text.  Axes are drawn as path elements, so the document has one
/// circle per vertex and one line per edge.
std::string render_svg(const PlaneGraph& g, const RenderSpec& spec = {}, const std::string& title = "");

enum class Figure { Fig1, Fig2, Fig3, Fig4, Fig5, Fig6 };

std::string to_string(Figure f);
/// "fig3" or "Fig3"; throws InvalidInput otherwise.
Figure parse_figure(const std::string& name);

/// One graph of a figure: the parameter and the sequence S_[1..n] it is
/// drawn from, n = preperiod + 2 * period.
struct FigureItem {
    std::string label;
    ComplexF parameter;
    int preperiod = 0;
    int period = 0;
    std::vector<ComplexF> seq;
    PlaneGraph graph;
};

std::vector<FigureItem> figure_items(Figure f);

/// Writes <family>_<index>.svg (index from 1) into out_dir and returns the
/// paths in order.
std::vector<std::filesystem::path> figure_family(Figure f, const std::filesystem::path& out_dir,
                                                 const RenderSpec& spec = {});

} // namespace rap
