#pragma once

#include <map>
#include <memory>
#include <optional>

#include "common.hpp"
#include "matchdiag.hpp"
#include "skein.hpp"
#include "tableaux.hpp"

namespace weblab {

// Per-shape workspace: ranking, covering digraph, profiles and memoized
// transposition actions. Not thread-safe; scans build their own tables.
class Context {
 public:
  explicit Context(Shape shape);

  const Shape& shape() const { return shape_; }
  Kind kind() const { return shape_.kind(); }
  int64_t count() const { return ranker_.count(); }
  const tableaux::Ranker& ranker() const { return ranker_; }

  const tableaux::TableauPoset& poset();

  std::string word(int64_t index) const;
  tableaux::StandardTableau tableau(int64_t index) const;
  std::string tableau_text(int64_t index) const;
  matchdiag::DepthProfile profile(int64_t index) const;

  int bfs_rank(int64_t index);                 // distance from the minimum
  int formula_rank(int64_t index) const;       // nesting + crossings
  int crossings(int64_t index) const;

  const skein::WebCombo& s_action(int i, int64_t index);
  skein::WebCombo s_action_combo(int i, const skein::WebCombo& combo);

 private:
  Shape shape_;
  tableaux::Ranker ranker_;
  std::optional<tableaux::TableauPoset> poset_;
  std::map<std::pair<int, int64_t>, skein::WebCombo> action_memo_;
};

}  // namespace weblab
