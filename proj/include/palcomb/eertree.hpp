#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "palcomb/word.hpp"

namespace palcomb {

// Palindromic tree over a fixed alphabet, with exact undo.
//
// The tree maintains one node per distinct nonempty palindromic factor of the
// text pushed so far, plus two sentinel roots of lengths -1 and 0. A push
// appends one symbol, creates at most one node and one transition edge, and
// records enough to restore the previous state bit-exactly; pop() undoes the
// most recent push. This is the engine under the rich-word census, where the
// DFS extends and retracts the text millions of times.
//
// An instance is single-owner mutable state: never share one across threads.
class Eertree {
 public:
  explicit Eertree(int alphabet_size);

  struct PushResult {
    // True iff the longest palindromic suffix of the new text is a palindrome
    // not seen before in this text.
    bool created_new;
  };

  PushResult push(Symbol c);

  // Restores tree, text and longest-suffix pointer to the state before the
  // matching push. Errors when no push is left to undo.
  void pop();

  // Number of distinct nonempty palindromic factors of the current text.
  int distinct_palindromes() const {
    return static_cast<int>(nodes_.size()) - 2;
  }

  int alphabet_size() const { return k_; }
  std::size_t text_length() const { return text_.size(); }
  const std::vector<Symbol>& text() const { return text_; }

  // Full textual state (nodes, links, transitions, suffix pointer, text);
  // used by tests to assert that pop() restores state exactly.
  std::string dump() const;

 private:
  struct Node {
    int len;
    int link;
  };

  struct UndoRecord {
    int prev_last;
    bool created;
    int parent;
    Symbol symbol;
  };

  static constexpr int kNone = -1;

  int trans(int node, Symbol c) const { return trans_[node * k_ + c]; }
  void set_trans(int node, Symbol c, int target) {
    trans_[node * k_ + c] = target;
  }
  int find_extension(int v, Symbol c) const;

  int k_;
  std::vector<Node> nodes_;
  std::vector<int> trans_;  // flat nodes x k table
  std::vector<Symbol> text_;
  std::vector<UndoRecord> history_;
  int last_;  // node of the longest palindromic suffix of the text
};

}  // namespace palcomb
