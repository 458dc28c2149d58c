"""Write include/gudg/detail/tile_data.hpp from tiles/*.json (scale 1e4)."""
import json, os, sys

HERE = os.path.dirname(os.path.abspath(__file__))
OUT = os.path.join(HERE, '..', '..', 'include', 'gudg', 'detail', 'tile_data.hpp')
DESIGNS = ['B1', 'B2', 'B3', 'V11', 'V12', 'C1', 'C2', 'C3', 'D1', 'D2', 'D3', 'D4', 'D5', 'E', 'L']


def straight_triple():
    pos = {}
    for j in range(1, 38):
        pos[f't{j}'] = (-19 + j, 1)
        pos[f'f{j}'] = (-19 + j, -1)
    return pos


def rename_rails(pos):
    out = {}
    for n, p in pos.items():
        out[('t' if n[0] == 'a' else 'f') + n[1:]] = p
    return out


def emit(name, pos, lines):
    lines.append(f'inline constexpr TilePoint k{name}[] = {{')
    for n in sorted(pos):
        x, y = (int(round(c * 10000)) for c in pos[n])
        lines.append(f'    {{"{n}", {x}, {y}}},')
    lines.append('};')


def main():
    lines = ['#pragma once', '', '// Generated by tools/tile_design/export_header.py; do not edit.', '',
             '#include <cstdint>', '#include <span>', '', 'namespace gudg::detail {', '',
             'struct TilePoint {', '    const char* name;', '    std::int64_t x;', '    std::int64_t y;', '};', '']
    for d in DESIGNS:
        pos = json.load(open(os.path.join(HERE, 'tiles', d + '.json')))['pos']
        if d == 'L':
            pos = rename_rails(pos)
        emit(d, pos, lines)
        lines.append('')
    emit('P1', straight_triple(), lines)
    lines.append('')
    lines.append('struct TileDesign {')
    lines.append('    const char* id;')
    lines.append('    std::span<const TilePoint> points;')
    lines.append('};')
    lines.append('')
    lines.append('inline constexpr TileDesign kTileDesigns[] = {')
    for d in DESIGNS + ['P1']:
        lines.append(f'    {{"{d}", k{d}}},')
    lines.append('};')
    lines.append('')
    lines.append('}  // namespace gudg::detail')
    open(OUT, 'w').write('\n'.join(lines) + '\n')


if __name__ == '__main__':
    sys.exit(main())
