/**
 * Typed client for the welter HTTP JSON API.
 *
 * All ordinals travel as grammar strings ("1", "w*2+4", "w^2+w*5+25").
 * Every method resolves with the parsed JSON body or rejects with an
 * ApiError carrying the HTTP status and the server's reason string, so
 * the UI can surface rejections (occupied / not smaller / no such coin)
 * without guessing.
 */

export type GameKind = "nim" | "welter";
export type Side = "human" | "engine";
export type Status = "ongoing" | "human_won" | "engine_won";

export interface HistoryEntry {
  by: Side;
  from: string;
  to: string;
}

export interface Session {
  id: string;
  game: GameKind;
  position: string[];
  to_move: Side;
  status: Status;
  human_first: boolean;
  history: HistoryEntry[];
}

export interface MoveRef {
  from: string;
  to: string;
}

export interface WhatIfEntry {
  from: string;
  to: string;
  legal: boolean;
  value?: string;
  reason?: string;
}

export interface BlockRow {
  lambda: string;
  /** The w*lambda part as a grammar string; empty for the finite block. */
  prefix: string;
  squares: number[];
}

export interface Analysis {
  value: string;
  p_position: boolean;
  winning_moves: MoveRef[];
  what_if: WhatIfEntry[];
  blocks?: BlockRow[];
}

export class ApiError extends Error {
  constructor(readonly status: number, readonly reason: string) {
    super(`${status}: ${reason}`);
    this.name = "ApiError";
  }
}

export class GameClient {
  constructor(
    readonly baseUrl: string,
    private readonly fetchFn: typeof fetch = fetch,
  ) {}

  private async request<T>(method: string, path: string, body?: unknown): Promise<T> {
    const init: RequestInit = { method };
    if (body !== undefined) {
      init.headers = { "Content-Type": "application/json" };
      init.body = JSON.stringify(body);
    }
    const response = await this.fetchFn(`${this.baseUrl}${path}`, init);
    const payload = (await response.json()) as Record<string, unknown>;
    if (!response.ok) {
      throw new ApiError(response.status, String(payload["error"] ?? response.statusText));
    }
    return payload as T;
  }

  createGame(
    game: GameKind,
    position: string[],
    humanFirst: boolean,
    seed = 0,
  ): Promise<Session> {
    return this.request<Session>("POST", "/games", {
      game,
      position,
      human_first: humanFirst,
      seed,
    });
  }

  getSession(id: string): Promise<Session> {
    return this.request<Session>("GET", `/games/${id}`);
  }

  postMove(id: string, from: string, to: string): Promise<Session> {
    return this.request<Session>("POST", `/games/${id}/moves`, { from, to });
  }

  engineMove(id: string): Promise<Session> {
    return this.request<Session>("POST", `/games/${id}/engine-move`);
  }

  analysis(id: string, candidates: MoveRef[] = []): Promise<Analysis> {
    let path = `/games/${id}/analysis`;
    if (candidates.length > 0) {
      const joined = candidates.map((c) => `${c.from}->${c.to}`).join(",");
      path += `?${new URLSearchParams({ candidates: joined }).toString()}`;
    }
    return this.request<Analysis>("GET", path);
  }
}
