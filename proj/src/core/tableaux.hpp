#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "common.hpp"

namespace weblab::tableaux {

// A standard filling of a rectangular shape is stored as its row sequence:
// rows[v-1] is the row index (0 = top) of the value v. Row sequences of
// standard fillings are exactly the ballot sequences: every prefix has
// #row0 >= #row1 >= #row2 and each count is at most `cols`.
using RowSeq = std::vector<uint8_t>;

// Boundary word over '+', '0', '-'. Row 0 -> '+', bottom row -> '-', and for
// three-row shapes the middle row -> '0'.
char row_symbol(const Shape& shape, int row);
int symbol_row(const Shape& shape, char sym);

std::string word_of(const Shape& shape, const RowSeq& rows);
RowSeq rows_of_word(const Shape& shape, const std::string& word);

bool is_ballot(const Shape& shape, const RowSeq& rows);

// Word sanity: (ab)-balanced / (ab)-Yamanouchi over the given symbol pair.
bool balanced(const std::string& word, char a, char b);
bool yamanouchi(const std::string& word, char a, char b);

// Throws MalformedWord unless `word` is the boundary word of a standard
// filling of `shape` (all balance and prefix conditions).
void check_standard_word(const Shape& shape, const std::string& word);

class StandardTableau {
 public:
  StandardTableau(const Shape& shape, RowSeq rows);

  const Shape& shape() const { return shape_; }
  const RowSeq& rows() const { return rows_; }
  int row_of(int value) const { return rows_[value - 1]; }

  // Rows of the grid, entries increasing left to right.
  std::vector<std::vector<int>> grid() const;
  // Text form "1,3/2,5/4,6".
  std::string text() const;
  std::string word() const { return word_of(shape_, rows_); }

  bool operator==(const StandardTableau& o) const { return rows_ == o.rows_; }

 private:
  Shape shape_;
  RowSeq rows_;
};

StandardTableau parse_tableau(const std::string& text);
std::string format_tableau(const Shape& shape, const RowSeq& rows);

// Exchanging the cells of values i and i+1 may leave standardness; callers
// get the raw grid plus a flag.
struct SwapResult {
  std::vector<std::vector<int>> grid;
  bool standard = false;
};
SwapResult apply_transposition(const StandardTableau& t, int i);

// Column reading word (down each column, left to right) and its inversion
// count, which equals the covering-poset rank.
std::vector<int> column_word(const StandardTableau& t);
int descent_count(const StandardTableau& t);

// Ranks ballot sequences in lexicographic order (equivalently, row-reading
// order of the fillings) without materialising them. Index 0 is the
// row-filled tableau; the column-filled one comes last.
class Ranker {
 public:
  explicit Ranker(const Shape& shape);

  const Shape& shape() const { return shape_; }
  int64_t count() const;
  int64_t rank(const RowSeq& rows) const;
  RowSeq unrank(int64_t index) const;
  int64_t rank_word(const std::string& word) const;

  int64_t column_filled_index() const;
  int64_t row_filled_index() const;

 private:
  int64_t completions(int c0, int c1, int c2) const;
  int state_id(int c0, int c1, int c2) const;

  Shape shape_;
  std::vector<int64_t> table_;
};

// Streaming enumeration in canonical (index) order.
class SytIterator {
 public:
  explicit SytIterator(const Shape& shape);
  bool next(RowSeq& out);  // false once exhausted

 private:
  Shape shape_;
  RowSeq cur_;
  bool started_ = false;
  bool done_ = false;
};

void for_each_syt(const Shape& shape, const std::function<void(const RowSeq&)>& fn);
int64_t count_syt(const Shape& shape);  // by full enumeration

// Covering digraph of the transposition order, plus breadth-first ranks
// measured from the column-filled minimum.
struct TableauPoset {
  Shape shape;
  int64_t n = 0;
  // edges[t] = (i, target): target = s_i . t with i moved to a higher row.
  std::vector<std::vector<std::pair<int, int64_t>>> out_edges;
  std::vector<std::vector<std::pair<int, int64_t>>> in_edges;
  std::vector<int> rank;
  int64_t minimum = -1;  // column-filled
  int64_t maximum = -1;  // row-filled
  int max_rank = 0;
};

// Positions i where an out-edge exists, read off the boundary word.
bool out_edge_at(const Shape& shape, const RowSeq& rows, int i);

TableauPoset build_poset(const Shape& shape, const Ranker& ranker);

}  // namespace weblab::tableaux
