#include "tableaux.hpp"

#include <algorithm>
#include <array>
#include <deque>
#include <sstream>

namespace weblab::tableaux {

char row_symbol(const Shape& shape, int row) {
  if (row == 0) return '+';
  if (row == shape.rows - 1) return '-';
  return '0';
}

int symbol_row(const Shape& shape, char sym) {
  switch (sym) {
    case '+': return 0;
    case '-': return shape.rows - 1;
    case '0':
      if (shape.rows == 3) return 1;
      break;
  }
  fail(Err::MalformedWord, std::string("symbol '") + sym + "' not valid for this shape");
}

std::string word_of(const Shape& shape, const RowSeq& rows) {
  std::string w(rows.size(), '?');
  for (size_t v = 0; v < rows.size(); ++v) w[v] = row_symbol(shape, rows[v]);
  return w;
}

RowSeq rows_of_word(const Shape& shape, const std::string& word) {
  RowSeq rows(word.size());
  for (size_t v = 0; v < word.size(); ++v) rows[v] = static_cast<uint8_t>(symbol_row(shape, word[v]));
  return rows;
}

bool is_ballot(const Shape& shape, const RowSeq& rows) {
  if (static_cast<int>(rows.size()) != shape.size()) return false;
  std::array<int, 3> c{0, 0, 0};
  for (uint8_t r : rows) {
    if (r >= shape.rows) return false;
    if (c[r] >= shape.cols) return false;
    if (r > 0 && c[r] >= c[r - 1]) return false;
    ++c[r];
  }
  for (int r = 0; r < shape.rows; ++r)
    if (c[r] != shape.cols) return false;
  return true;
}

bool balanced(const std::string& word, char a, char b) {
  long ca = std::count(word.begin(), word.end(), a);
  long cb = std::count(word.begin(), word.end(), b);
  return ca == cb;
}

bool yamanouchi(const std::string& word, char a, char b) {
  long open = 0;
  for (char s : word) {
    if (s == a) ++open;
    if (s == b && --open < 0) return false;
  }
  return true;
}

void check_standard_word(const Shape& shape, const std::string& word) {
  if (static_cast<int>(word.size()) != shape.size())
    fail(Err::MalformedWord, "word length does not match shape");
  for (char s : word) symbol_row(shape, s);
  auto need = [&](char a, char b) {
    if (!balanced(word, a, b))
      fail(Err::Unbalanced, std::string("word not (") + a + b + ")-balanced");
    if (!yamanouchi(word, a, b))
      fail(Err::YamanouchiViolation, std::string("word not (") + a + b + ")-Yamanouchi");
  };
  need('+', '-');
  if (shape.rows == 3) {
    need('+', '0');
    need('0', '-');
  }
}

StandardTableau::StandardTableau(const Shape& shape, RowSeq rows)
    : shape_(shape), rows_(std::move(rows)) {
  if (!shape_.valid()) fail(Err::InvalidArgument, "invalid shape");
  if (!is_ballot(shape_, rows_)) fail(Err::MalformedTableau, "filling is not standard");
}

std::vector<std::vector<int>> StandardTableau::grid() const {
  std::vector<std::vector<int>> g(shape_.rows);
  for (int v = 1; v <= shape_.size(); ++v) g[rows_[v - 1]].push_back(v);
  return g;
}

std::string StandardTableau::text() const { return format_tableau(shape_, rows_); }

std::string format_tableau(const Shape& shape, const RowSeq& rows) {
  std::vector<std::vector<int>> g(shape.rows);
  for (size_t v = 0; v < rows.size(); ++v) g[rows[v]].push_back(static_cast<int>(v) + 1);
  std::string out;
  for (int r = 0; r < shape.rows; ++r) {
    if (r) out += '/';
    for (size_t c = 0; c < g[r].size(); ++c) {
      if (c) out += ',';
      out += std::to_string(g[r][c]);
    }
  }
  return out;
}

StandardTableau parse_tableau(const std::string& text) {
  std::vector<std::vector<int>> grid(1);
  int value = 0;
  bool in_number = false;
  for (char ch : text) {
    if (ch >= '0' && ch <= '9') {
      value = value * 10 + (ch - '0');
      in_number = true;
    } else if (ch == ',' || ch == '/') {
      if (!in_number) fail(Err::MalformedTableau, "empty entry in tableau text");
      grid.back().push_back(value);
      value = 0;
      in_number = false;
      if (ch == '/') grid.emplace_back();
    } else if (ch == ' ') {
      continue;
    } else {
      fail(Err::MalformedTableau, std::string("unexpected character '") + ch + "' in tableau text");
    }
  }
  if (!in_number) fail(Err::MalformedTableau, "tableau text ends without an entry");
  grid.back().push_back(value);

  int rows = static_cast<int>(grid.size());
  if (rows != 2 && rows != 3) fail(Err::MalformedTableau, "tableau must have 2 or 3 rows");
  int cols = static_cast<int>(grid[0].size());
  for (auto& row : grid)
    if (static_cast<int>(row.size()) != cols)
      fail(Err::MalformedTableau, "tableau rows have unequal lengths");
  Shape shape{rows, cols};

  RowSeq rs(shape.size(), 255);
  for (int r = 0; r < rows; ++r)
    for (int v : grid[r]) {
      if (v < 1 || v > shape.size() || rs[v - 1] != 255)
        fail(Err::MalformedTableau, "entries must be 1..m, each exactly once");
      rs[v - 1] = static_cast<uint8_t>(r);
    }
  if (!is_ballot(shape, rs)) fail(Err::MalformedTableau, "filling is not standard");
  // Rows must also have been written in increasing order.
  for (int r = 0; r < rows; ++r)
    for (size_t c = 1; c < grid[r].size(); ++c)
      if (grid[r][c - 1] >= grid[r][c])
        fail(Err::MalformedTableau, "row entries must increase left to right");
  return StandardTableau(shape, std::move(rs));
}

SwapResult apply_transposition(const StandardTableau& t, int i) {
  const Shape& shape = t.shape();
  if (i < 1 || i >= shape.size()) fail(Err::InvalidArgument, "transposition index out of range");
  SwapResult res;
  res.grid = t.grid();
  for (auto& row : res.grid)
    for (int& v : row) {
      if (v == i) v = i + 1;
      else if (v == i + 1) v = i;
    }
  res.standard = true;
  for (int r = 0; r < shape.rows && res.standard; ++r)
    for (int c = 0; c < shape.cols && res.standard; ++c) {
      if (c + 1 < shape.cols && res.grid[r][c] >= res.grid[r][c + 1]) res.standard = false;
      if (r + 1 < shape.rows && res.grid[r][c] >= res.grid[r + 1][c]) res.standard = false;
    }
  return res;
}

std::vector<int> column_word(const StandardTableau& t) {
  auto g = t.grid();
  std::vector<int> w;
  w.reserve(t.shape().size());
  for (int c = 0; c < t.shape().cols; ++c)
    for (int r = 0; r < t.shape().rows; ++r) w.push_back(g[r][c]);
  return w;
}

int descent_count(const StandardTableau& t) {
  // Pairs i<j with j read before i.
  auto w = column_word(t);
  int inv = 0;
  for (size_t a = 0; a < w.size(); ++a)
    for (size_t b = a + 1; b < w.size(); ++b)
      if (w[a] > w[b]) ++inv;
  return inv;
}

Ranker::Ranker(const Shape& shape) : shape_(shape) {
  if (!shape.valid()) fail(Err::InvalidArgument, "invalid shape");
  int n = shape.cols;
  int dim = n + 1;
  table_.assign(static_cast<size_t>(dim) * dim * (shape.rows == 3 ? dim : 1), -1);
  // Fill by decreasing total so each state only needs its successors.
  auto& tbl = table_;
  auto id = [&](int c0, int c1, int c2) { return state_id(c0, c1, c2); };
  int c2max = shape.rows == 3 ? n : 0;
  for (int total = shape.size(); total >= 0; --total) {
    for (int c0 = 0; c0 <= n; ++c0)
      for (int c1 = 0; c1 <= c0; ++c1)
        for (int c2 = 0; c2 <= std::min(c1, c2max); ++c2) {
          if (c0 + c1 + c2 != total) continue;
          if (total == shape.size()) {
            tbl[id(c0, c1, c2)] = 1;
            continue;
          }
          int64_t ways = 0;
          if (c0 < n) ways = checked_add(ways, tbl[id(c0 + 1, c1, c2)]);
          if (c1 < c0) ways = checked_add(ways, tbl[id(c0, c1 + 1, c2)]);
          if (shape.rows == 3 && c2 < c1) ways = checked_add(ways, tbl[id(c0, c1, c2 + 1)]);
          tbl[id(c0, c1, c2)] = ways;
        }
  }
}

int Ranker::state_id(int c0, int c1, int c2) const {
  int dim = shape_.cols + 1;
  return (c0 * dim + c1) * (shape_.rows == 3 ? dim : 1) + c2;
}

int64_t Ranker::completions(int c0, int c1, int c2) const {
  if (c1 > c0 || c2 > c1) return 0;
  if (c0 > shape_.cols || c1 > shape_.cols || c2 > shape_.cols) return 0;
  return table_[state_id(c0, c1, c2)];
}

int64_t Ranker::count() const { return table_[state_id(0, 0, 0)]; }

int64_t Ranker::rank(const RowSeq& rows) const {
  if (!is_ballot(shape_, rows)) fail(Err::MalformedTableau, "filling is not standard");
  std::array<int, 3> c{0, 0, 0};
  int64_t acc = 0;
  for (uint8_t r : rows) {
    for (int s = 0; s < r; ++s) {
      std::array<int, 3> d = c;
      ++d[s];
      acc = checked_add(acc, completions(d[0], d[1], d[2]));
    }
    ++c[r];
  }
  return acc;
}

RowSeq Ranker::unrank(int64_t index) const {
  if (index < 0 || index >= count()) fail(Err::InvalidArgument, "tableau index out of range");
  RowSeq rows(shape_.size());
  std::array<int, 3> c{0, 0, 0};
  for (int v = 0; v < shape_.size(); ++v) {
    for (int s = 0; s < shape_.rows; ++s) {
      std::array<int, 3> d = c;
      ++d[s];
      int64_t w = completions(d[0], d[1], d[2]);
      if (index < w) {
        rows[v] = static_cast<uint8_t>(s);
        c = d;
        break;
      }
      index -= w;
    }
  }
  return rows;
}

int64_t Ranker::rank_word(const std::string& word) const {
  check_standard_word(shape_, word);
  return rank(rows_of_word(shape_, word));
}

int64_t Ranker::column_filled_index() const {
  RowSeq rows(shape_.size());
  for (int v = 0; v < shape_.size(); ++v) rows[v] = static_cast<uint8_t>(v % shape_.rows);
  return rank(rows);
}

int64_t Ranker::row_filled_index() const {
  return 0;  // row sequence 0..0 1..1 2..2 is lexicographically least
}

SytIterator::SytIterator(const Shape& shape) : shape_(shape) {
  if (!shape.valid()) fail(Err::InvalidArgument, "invalid shape");
}

namespace {

// Fill positions from `pos` on with the lexicographically least valid rows.
void fill_least(const Shape& shape, RowSeq& rows, int pos, std::array<int, 3>& c) {
  for (int v = pos; v < shape.size(); ++v) {
    for (int s = 0; s < shape.rows; ++s) {
      bool ok = c[s] < shape.cols && (s == 0 || c[s] < c[s - 1]);
      if (ok) {
        rows[v] = static_cast<uint8_t>(s);
        ++c[s];
        break;
      }
    }
  }
}

}  // namespace

bool SytIterator::next(RowSeq& out) {
  if (done_) return false;
  if (!started_) {
    started_ = true;
    cur_.assign(shape_.size(), 0);
    std::array<int, 3> c{0, 0, 0};
    fill_least(shape_, cur_, 0, c);
    out = cur_;
    return true;
  }
  // Standard lexicographic successor over ballot sequences.
  std::array<int, 3> c{0, 0, 0};
  for (uint8_t r : cur_) ++c[r];
  for (int v = shape_.size() - 1; v >= 0; --v) {
    int r = cur_[v];
    --c[r];
    for (int s = r + 1; s < shape_.rows; ++s) {
      bool ok = c[s] < shape_.cols && (s == 0 || c[s] < c[s - 1]);
      if (!ok) continue;
      cur_[v] = static_cast<uint8_t>(s);
      ++c[s];
      fill_least(shape_, cur_, v + 1, c);
      out = cur_;
      return true;
    }
  }
  done_ = true;
  return false;
}

void for_each_syt(const Shape& shape, const std::function<void(const RowSeq&)>& fn) {
  SytIterator it(shape);
  RowSeq rows;
  while (it.next(rows)) fn(rows);
}

int64_t count_syt(const Shape& shape) {
  int64_t n = 0;
  for_each_syt(shape, [&](const RowSeq&) { ++n; });
  return n;
}

bool out_edge_at(const Shape& shape, const RowSeq& rows, int i) {
  // Edge exists exactly when value i sits in a lower row than i+1 does.
  return rows[i - 1] > rows[i];
}

TableauPoset build_poset(const Shape& shape, const Ranker& ranker) {
  TableauPoset p;
  p.shape = shape;
  p.n = ranker.count();
  p.out_edges.resize(p.n);
  p.in_edges.resize(p.n);
  p.rank.assign(p.n, -1);

  int64_t idx = 0;
  for_each_syt(shape, [&](const RowSeq& rows) {
    for (int i = 1; i < shape.size(); ++i) {
      if (!out_edge_at(shape, rows, i)) continue;
      RowSeq target = rows;
      std::swap(target[i - 1], target[i]);
      int64_t tgt = ranker.rank(target);
      p.out_edges[idx].emplace_back(i, tgt);
      p.in_edges[tgt].emplace_back(i, idx);
    }
    ++idx;
  });
  if (idx != p.n) fail(Err::Internal, "enumeration count mismatch");

  p.minimum = ranker.column_filled_index();
  p.maximum = ranker.row_filled_index();

  std::deque<int64_t> queue;
  p.rank[p.minimum] = 0;
  queue.push_back(p.minimum);
  while (!queue.empty()) {
    int64_t t = queue.front();
    queue.pop_front();
    for (auto& [i, u] : p.out_edges[t]) {
      (void)i;
      if (p.rank[u] < 0) {
        p.rank[u] = p.rank[t] + 1;
        p.max_rank = std::max(p.max_rank, p.rank[u]);
        queue.push_back(u);
      }
    }
  }
  for (int64_t t = 0; t < p.n; ++t) {
    if (p.rank[t] < 0) fail(Err::NotGraded, "covering digraph is not connected from the minimum");
    for (auto& [i, u] : p.out_edges[t]) {
      (void)i;
      if (p.rank[u] != p.rank[t] + 1)
        fail(Err::NotGraded, "covering edge does not raise rank by one");
    }
  }
  // Unique maximal element: no out-edges anywhere else.
  for (int64_t t = 0; t < p.n; ++t)
    if (p.out_edges[t].empty() && t != p.maximum)
      fail(Err::NotGraded, "unexpected maximal element");
  return p;
}

}  // namespace weblab::tableaux
