// Line-oriented ASCII file formats: graphs, games, matrix models,
// presentations, points and Cayley tables. Parsers report line numbers;
// renderers are canonical so that parse(render(x)) == x byte for byte.
#pragma once

#include <string>
#include <vector>

#include "synq/classical.hpp"
#include "synq/game.hpp"
#include "synq/presentation.hpp"
#include "synq/repcheck.hpp"

namespace synq {

class ParseError : public Error {
public:
  ParseError(int line, const std::string& message);
  int line() const { return line_; }

private:
  int line_;
};

// Graph file: first line "n m", then m lines "u v"; '#' comments allowed.
Graph parse_graph(const std::string& text);
std::string render_graph(const Graph& g);

// Game file: "inputs N", "outputs M", zero or more "forbid a b x y";
// sync-forced tuples are auto-inserted and the set is closed under the
// adjoint symmetry; forbidding a diagonal (a,a,x,x) is rejected.
GameSpec parse_game(const std::string& text);
std::string render_game(const GameSpec& spec);

// Model file: "dim d", then per-generator blocks "gen x a" followed by d
// lines of d complex entries "re,im".
MatrixModel parse_model(const std::string& text);
std::string render_model(const MatrixModel& m);

// Presentation file: header (inputs/outputs/variant), then one relation per
// line prefixed PROJ, STAR, ROWSUM, COLSUM or "ORTH a b x y", each carrying
// its element in the ncalg serialization.
Presentation parse_presentation(const std::string& text);
std::string render_presentation(const Presentation& p);

std::string render_points(const std::vector<ClassicalPoint>& points);
std::string render_cayley_csv(const CayleyReport& report);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

}  // namespace synq
