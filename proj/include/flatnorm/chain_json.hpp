#pragma once

#include <string>

#include "flatnorm/chain.hpp"

namespace flatnorm {

/**
 * Chain wire format, shared by the CLI and test fixtures:
 *   {"complex": {"width": w, "height": h, "spacing": s, "topology": "..."},
 *    "dim": d, "cells": [[index, coeff], ...]}
 * with cell indices sorted ascending. Round-trips are exact for the cells;
 * loading constructs a fresh complex from the recorded parameters.
 */
std::string chain_to_json(const Chain& c);
Chain chain_from_json(const std::string& text);
Chain load_chain_json(const std::string& path);
void save_chain_json(const Chain& c, const std::string& path);

} // namespace flatnorm
