#ifndef BG_GAME_IO_HPP
#define BG_GAME_IO_HPP

#include <stdexcept>
#include <string>

#include "bg/game.hpp"

namespace bg {

/// Error in an input document, such as malformed JSON or a missing coalition.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// {"n": 3, "v": {"1": "0", ..., "1,2,3": "1"}}. Every nonempty coalition must
/// be present exactly once; values are "p/q" or integer strings (bare JSON
/// integers are accepted too).
Game parse_game_json(const std::string& text);
std::string render_game_json(const Game& v);

Game load_game_file(const std::string& path);

}  // namespace bg

#endif  // BG_GAME_IO_HPP
