// Thin typed client over the session HTTP API. The client never decides
// legality itself: every move goes to the server and the server's verdict
// (new state or a 422 reason) is what the UI shows.

export interface ServerState {
  classes: number[][];
  counts: number[];
  mover: "alice" | "bob";
  status: "ongoing" | "alice" | "bob";
  labels: string[];
}

export interface MoveRecord {
  player: "alice" | "bob";
  element: number;
  color: number;
}

export interface SessionDoc {
  id: string;
  humanSide: "alice" | "bob";
  engineStrategy: string;
  colors: number;
  multiplicity: number;
  lists: number[][] | null;
  meta: Record<string, unknown>;
  state: ServerState;
  moves: MoveRecord[];
}

export interface LegalMove {
  element: number;
  color: number;
}

export interface DebugDoc {
  engine: string;
  snapshot: Record<string, unknown>;
}

export type MoveResult =
  | { ok: true; session: SessionDoc }
  | { ok: false; reason: string };

export type FetchLike = (
  input: string,
  init?: RequestInit,
) => Promise<Response>;

export class SessionApi {
  constructor(
    private baseUrl: string = "",
    private fetchImpl: FetchLike = (input, init) => fetch(input, init),
  ) {}

  private async request(path: string, init?: RequestInit): Promise<Response> {
    return this.fetchImpl(this.baseUrl + path, init);
  }

  async createSession(
    config: unknown,
    humanSide: "alice" | "bob",
    engineStrategy: string,
    seed?: number,
  ): Promise<SessionDoc> {
    const res = await this.request("/sessions", {
      method: "POST",
      headers: { "Content-Type": "application/json" },
      body: JSON.stringify({ config, humanSide, engineStrategy, seed }),
    });
    if (!res.ok) {
      const body = await res.json().catch(() => ({}));
      throw new Error(body?.detail?.reason ?? `create failed (${res.status})`);
    }
    return res.json();
  }

  async getSession(id: string): Promise<SessionDoc> {
    const res = await this.request(`/sessions/${id}`);
    if (!res.ok) throw new Error(`unknown session (${res.status})`);
    return res.json();
  }

  async postMove(
    id: string,
    element: number,
    color: number,
  ): Promise<MoveResult> {
    const res = await this.request(`/sessions/${id}/moves`, {
      method: "POST",
      headers: { "Content-Type": "application/json" },
      body: JSON.stringify({ element, color }),
    });
    if (res.status === 422) {
      const body = await res.json();
      return { ok: false, reason: body.detail.reason };
    }
    if (!res.ok) throw new Error(`move failed (${res.status})`);
    return { ok: true, session: await res.json() };
  }

  async getLegal(id: string): Promise<LegalMove[]> {
    const res = await this.request(`/sessions/${id}/legal`);
    if (!res.ok) throw new Error(`legal query failed (${res.status})`);
    const body = await res.json();
    return body.moves;
  }

  async getDebug(id: string): Promise<DebugDoc> {
    const res = await this.request(`/sessions/${id}/debug`);
    if (!res.ok) throw new Error(`debug query failed (${res.status})`);
    return res.json();
  }
}
