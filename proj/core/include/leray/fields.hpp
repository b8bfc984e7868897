#pragma once

#include "leray/electro.hpp"
#include "leray/magneto.hpp"
#include "leray/medium.hpp"
#include "leray/retarded.hpp"
#include "leray/verify.hpp"
