#pragma once

#define TPQ_VERSION "0.1.0"
