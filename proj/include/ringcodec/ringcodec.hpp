#pragma once

#include "z4.hpp"
#include "galois_ring.hpp"
#include "group_algebra.hpp"
#include "codebuild.hpp"
#include "channel.hpp"
#include "decode_map.hpp"
#include "decode_lifting.hpp"
#include "simulate.hpp"
