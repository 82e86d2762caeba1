#include "context.hpp"

namespace weblab {

Context::Context(Shape shape) : shape_(shape), ranker_(shape) {}

const tableaux::TableauPoset& Context::poset() {
  if (!poset_) poset_ = tableaux::build_poset(shape_, ranker_);
  return *poset_;
}

std::string Context::word(int64_t index) const {
  return tableaux::word_of(shape_, ranker_.unrank(index));
}

tableaux::StandardTableau Context::tableau(int64_t index) const {
  return tableaux::StandardTableau(shape_, ranker_.unrank(index));
}

std::string Context::tableau_text(int64_t index) const {
  return tableaux::format_tableau(shape_, ranker_.unrank(index));
}

matchdiag::DepthProfile Context::profile(int64_t index) const {
  return matchdiag::depth_profile(word(index));
}

int Context::bfs_rank(int64_t index) { return poset().rank[index]; }

int Context::formula_rank(int64_t index) const {
  std::string w = word(index);
  if (shape_.rows == 2)
    return matchdiag::nesting_number(matchdiag::matching_from_word(w, '+', '-'));
  return matchdiag::rank_formula_m(matchdiag::m_diagram_of_word(w));
}

int Context::crossings(int64_t index) const {
  if (shape_.rows == 2) return 0;
  return matchdiag::crossing_number(matchdiag::m_diagram_of_word(word(index)));
}

const skein::WebCombo& Context::s_action(int i, int64_t index) {
  auto key = std::make_pair(i, index);
  auto it = action_memo_.find(key);
  if (it == action_memo_.end())
    it = action_memo_.emplace(key, skein::s_action(shape_, i, index, ranker_)).first;
  return it->second;
}

skein::WebCombo Context::s_action_combo(int i, const skein::WebCombo& combo) {
  skein::WebCombo out{combo.kind, combo.shape, {}};
  for (auto& [idx, coeff] : combo.terms) out += skein::scaled(s_action(i, idx), coeff);
  return out;
}

}  // namespace weblab
