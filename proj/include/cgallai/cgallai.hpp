#pragma once

#include "cgallai/augment.hpp"
#include "cgallai/errors.hpp"
#include "cgallai/forest.hpp"
#include "cgallai/frame.hpp"
#include "cgallai/graph.hpp"
#include "cgallai/io.hpp"
#include "cgallai/model.hpp"
#include "cgallai/oracle.hpp"
#include "cgallai/pattern.hpp"
#include "cgallai/topominor.hpp"
#include "cgallai/tripod.hpp"
