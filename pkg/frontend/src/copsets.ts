// Client-side membership evaluation for the five generator kinds.
// Static cops are never transmitted: the server sends the generator spec once
// and the client evaluates membership for every lattice point in the viewport.
// Must agree with the server's `contains` on every point (see the
// /debug/contains parity test).

export interface ExplicitJson {
  kind: "explicit";
  points: number[][];
}

export interface AxisGeometricJson {
  kind: "axis_geometric";
  axis: number; // 1-based
  base: number;
  signs: ("+" | "-")[];
  startExponent: number;
}

export interface AxisArithmeticJson {
  kind: "axis_arithmetic";
  axis: number; // 1-based
  step: number;
  offset: number;
  signs: ("+" | "-")[];
}

export interface SublatticeJson {
  kind: "sublattice";
  moduli: number[];
  residues: number[];
}

export interface HalfSpaceJson {
  kind: "half_space";
  axis: number; // 1-based
  sign: "+" | "-";
  threshold: number;
}

export type GeneratorJson =
  | ExplicitJson
  | AxisGeometricJson
  | AxisArithmeticJson
  | SublatticeJson
  | HalfSpaceJson;

export interface CopSetSpecJson {
  dimension: number;
  generators: GeneratorJson[];
}

function mod(x: number, m: number): number {
  return ((x % m) + m) % m;
}

function axisValueMember(g: AxisGeometricJson | AxisArithmeticJson, v: number): boolean {
  if (g.kind === "axis_geometric") {
    if (v < Math.pow(g.base, g.startExponent)) return false;
    while (v % g.base === 0) v /= g.base;
    return v === 1;
  }
  return v >= g.offset && (v - g.offset) % g.step === 0;
}

export function generatorContains(g: GeneratorJson, p: number[]): boolean {
  switch (g.kind) {
    case "explicit":
      return g.points.some((q) => q.length === p.length && q.every((x, i) => x === p[i]));
    case "axis_geometric":
    case "axis_arithmetic": {
      const axis = g.axis - 1;
      if (p.some((x, i) => i !== axis && x !== 0)) return false;
      const v = p[axis]!;
      if (v === 0) return axisValueMember(g, 0);
      const sign = v > 0 ? "+" : "-";
      return g.signs.includes(sign) && axisValueMember(g, Math.abs(v));
    }
    case "sublattice":
      return p.every((x, i) => mod(x, g.moduli[i]!) === g.residues[i]);
    case "half_space": {
      const s = g.sign === "+" ? 1 : -1;
      return s * p[g.axis - 1]! >= g.threshold;
    }
  }
}

export function contains(spec: CopSetSpecJson, p: number[]): boolean {
  if (p.length !== spec.dimension) {
    throw new Error(`point has dimension ${p.length}, want ${spec.dimension}`);
  }
  return spec.generators.some((g) => generatorContains(g, p));
}

// Shell index about an apex: sign*(p_m - q_m) minus the off-axis L1 sum.
// Used only for drawing cone guide lines; never for game decisions.
export function shellIndex(
  p: number[],
  axis: number, // 0-based
  sign: 1 | -1,
  apex: number[],
): number {
  let off = 0;
  for (let j = 0; j < p.length; j++) {
    if (j !== axis) off += Math.abs(p[j]! - apex[j]!);
  }
  return sign * (p[axis]! - apex[axis]!) - off;
}
