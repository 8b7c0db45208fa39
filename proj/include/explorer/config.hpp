#ifndef EXPLORER_CONFIG_HPP_
#define EXPLORER_CONFIG_HPP_

#include <string>

#include "explorer/engine.hpp"

namespace explorer {

// JSON configuration document. width and height are required; everything
// else defaults to:
//   refuge {x:0, y:0, w:4, h:4}, start [1, 1],
//   fear_initial 0.9, fear_decay 0.02, w_explore 1, w_fear 1,
//   mode "stochastic", bin_width 100, max_ticks 200000, seed 42.
// Unknown keys (top level or inside refuge) are rejected, so a typo can
// never silently fall back to a default.
//
// Throws ParseError (malformed JSON), UnknownKey, and ValidationError /
// gridworld errors naming the offending key. Never partially applies
// defaults on failure.
SimConfig parse_config(const std::string& text);

}  // namespace explorer

#endif  // EXPLORER_CONFIG_HPP_
