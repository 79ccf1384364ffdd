// Built-in game setups. Each preset yields the JSON config the server
// expects plus enough structure for the board renderer to group elements.

export interface Preset {
  name: string;
  config: Record<string, unknown>;
  colors: number;
  // for graphic presets: endpoints per element, used to draw edge labels
  edges?: [number, number][];
}

const K4_EDGES: [number, number][] = [
  [0, 1], [0, 2], [0, 3], [1, 2], [1, 3], [2, 3],
];

export function uniformPreset(): Preset {
  return {
    name: "U(2,3)",
    colors: 4,
    config: {
      v: 1,
      matroid: { v: 1, type: "uniform", n: 3, r: 2 },
      colors: 4,
      multiplicity: 1,
      first_player: "bob",
    },
  };
}

export function k4Preset(): Preset {
  return {
    name: "K4 graphic",
    colors: 4,
    edges: K4_EDGES,
    config: {
      v: 1,
      matroid: { v: 1, type: "graphic", vertices: 4, edges: K4_EDGES },
      colors: 4,
      multiplicity: 1,
      first_player: "bob",
    },
  };
}

// Transversal family: one slot per D block plus 2k-1 copies of everything;
// element order is the hub block C then D_1..D_{3k(2k-1)}.
export function mkPreset(k = 3, colors = 2 * k - 2): Preset {
  const width = 2 * k - 1;
  const numD = 3 * k * width;
  const nC = k * width;
  const n = nC + numD * k;
  const labels: string[] = [];
  for (let i = 1; i <= k; i++)
    for (let j = 1; j <= width; j++) labels.push(`c_${i}_${j}`);
  for (let a = 1; a <= numD; a++)
    for (let i = 1; i <= k; i++) labels.push(`d_${i}_${a}`);
  const family: number[][] = [];
  for (let a = 0; a < numD; a++) {
    const start = nC + a * k;
    family.push(Array.from({ length: k }, (_, i) => start + i));
  }
  const everything = Array.from({ length: n }, (_, e) => e);
  for (let c = 0; c < width; c++) family.push(everything);
  return {
    name: `M_${k}`,
    colors,
    config: {
      v: 1,
      matroid: { v: 1, type: "transversal", n, family, labels },
      colors,
      multiplicity: 1,
      first_player: "bob",
      meta: { mk_k: k },
    },
  };
}

export const PRESETS: Record<string, () => Preset> = {
  "u23": uniformPreset,
  "k4": k4Preset,
  "m3": () => mkPreset(3),
};
