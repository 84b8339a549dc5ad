#include "palcomb/eertree.hpp"

#include <sstream>

namespace palcomb {

Eertree::Eertree(int alphabet_size) : k_(alphabet_size) {
  if (alphabet_size < 1 || alphabet_size > kMaxAlphabet) {
    throw std::invalid_argument("alphabet size must be in [1, 36]");
  }
  // Node 0: imaginary root of length -1 (its own suffix link);
  // node 1: root of length 0.
  nodes_.push_back({-1, 0});
  nodes_.push_back({0, 0});
  trans_.assign(2 * static_cast<std::size_t>(k_), kNone);
  last_ = 1;
}

int Eertree::find_extension(int v, Symbol c) const {
  const int i = static_cast<int>(text_.size()) - 1;
  while (true) {
    const int j = i - nodes_[static_cast<std::size_t>(v)].len - 1;
    if (j >= 0 && text_[static_cast<std::size_t>(j)] == c) return v;
    v = nodes_[static_cast<std::size_t>(v)].link;
  }
}

Eertree::PushResult Eertree::push(Symbol c) {
  if (c >= k_) throw std::invalid_argument("symbol outside alphabet");
  text_.push_back(c);
  const int cur = find_extension(last_, c);
  UndoRecord rec{last_, false, kNone, c};
  if (const int next = trans(cur, c); next != kNone) {
    last_ = next;
  } else {
    const int len = nodes_[static_cast<std::size_t>(cur)].len + 2;
    int link;
    if (len == 1) {
      link = 1;
    } else {
      // The longest proper palindromic suffix of the new palindrome already
      // has a node: it occurred earlier in the text.
      const int t = find_extension(nodes_[static_cast<std::size_t>(cur)].link, c);
      link = trans(t, c);
    }
    const int id = static_cast<int>(nodes_.size());
    nodes_.push_back({len, link});
    trans_.insert(trans_.end(), static_cast<std::size_t>(k_), kNone);
    set_trans(cur, c, id);
    rec.created = true;
    rec.parent = cur;
    last_ = id;
  }
  history_.push_back(rec);
  return {rec.created};
}

void Eertree::pop() {
  if (history_.empty()) throw std::logic_error("pop with no push to undo");
  const UndoRecord rec = history_.back();
  history_.pop_back();
  if (rec.created) {
    set_trans(rec.parent, rec.symbol, kNone);
    nodes_.pop_back();
    trans_.resize(nodes_.size() * static_cast<std::size_t>(k_));
  }
  last_ = rec.prev_last;
  text_.pop_back();
}

std::string Eertree::dump() const {
  std::ostringstream out;
  for (std::size_t i = 0; i < nodes_.size(); ++i) {
    out << i << ":(" << nodes_[i].len << "," << nodes_[i].link;
    for (int c = 0; c < k_; ++c) {
      out << "," << trans(static_cast<int>(i), static_cast<Symbol>(c));
    }
    out << ")";
  }
  out << "|last=" << last_ << "|text=";
  for (Symbol s : text_) out << static_cast<int>(s);
  return out.str();
}

}  // namespace palcomb
