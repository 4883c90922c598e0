"""Rendering construction figures as SVG.

Writes two figures into the current directory:

* pip_b1_chain.svg  -- the four stages of the one-boundary-point chain,
  splitting lines in gray, removed half-open segments dashed;
* heptagon_split.svg -- the heptagon next to its sheared reassembly.
"""
from ehrpoly import heptagon_decomposition, pip_b1
from ehrpoly.svg import Panel, render_panels

print(__doc__)

trace = pip_b1(3)
panels = [Panel(s.region, s.label, s.splitting_lines) for s in trace.steps]
with open("pip_b1_chain.svg", "w") as fh:
    fh.write(render_panels(panels))
print("wrote pip_b1_chain.svg")

dec = heptagon_decomposition(3)
T1, T2, T3 = dec["triangles"]
U1T1, U2T2 = dec["mapped"]
with open("heptagon_split.svg", "w") as fh:
    fh.write(render_panels([
        Panel(dec["heptagon"], "H (s=3)", pieces=[dec["rectangle"], T1, T2, T3]),
        Panel(dec["h_prime"], "H'", pieces=[dec["rectangle"], U1T1, U2T2, T3]),
    ]))
print("wrote heptagon_split.svg")
