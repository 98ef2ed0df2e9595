#pragma once

#include "sumlab/constructible.hpp"
#include "sumlab/subset.hpp"

#include <string>

namespace sumlab {

/// Subset descriptor for a given group:
///   {"type":"literal","elements":[[0],[1],[4]]}   (coordinate lists)
///   {"type":"random","density":"1/2","seed":7}
/// Cyclic groups also accept the inline shorthand "0,1,4".
/// Parse failures raise InputError with the byte offset.
GroupSubset parse_subset(const GroupPtr& g, const std::string& text);

/// Constructible-set grammar (rationals as strings "p/q"):
///   {"type":"interval","a":"0","b":"1/4"}
///   {"type":"cantor","depth":3}
///   {"type":"point","coords":["1/8"]}
///   {"type":"box","intervals":[{"a":"0","b":"1/2"}, ...]}
///   {"type":"union","parts":[...]}
///   {"type":"product","parts":[...]}
///   {"type":"translate","by":["1/8"],"of":{...}}
ConstructibleSet parse_constructible(const std::string& text);

} // namespace sumlab
