/** Typed client for the segmentation session service. */

import type { Rle } from "./rle";

export type ClickLabel = "positive" | "negative";

export interface SceneInfo {
  id: string;
  n_points: number;
  has_labels: boolean;
  bounds: { min: number[]; max: number[] };
  instances: number[];
}

export interface SceneListing {
  scenes: SceneInfo[];
  models: string[];
}

export interface SessionInfo {
  session_id: string;
  scene_id: string;
  model_id: string;
  n_points: number;
  n_voxels: number;
  max_clicks: number;
}

export interface ClickRecord {
  x: number;
  y: number;
  z: number;
  label: ClickLabel;
}

export interface MaskPayload {
  session_id: string;
  mask_rle: Rle;
  mask_true_count: number;
  voxel_count: number;
  n_points: number;
  clicks: ClickRecord[];
  sequence: number;
  iou?: number;
  snapped?: boolean;
  notice?: string;
}

export class ApiError extends Error {
  constructor(public status: number, detail: string) {
    super(detail);
  }
}

async function request<T>(url: string, init?: RequestInit): Promise<T> {
  const resp = await fetch(url, init);
  if (!resp.ok) {
    let detail = resp.statusText;
    try {
      detail = (await resp.json()).detail ?? detail;
    } catch {
      /* non-JSON error body */
    }
    throw new ApiError(resp.status, detail);
  }
  return (await resp.json()) as T;
}

export class SessionApi {
  constructor(private base: string) {}

  listScenes(): Promise<SceneListing> {
    return request(`${this.base}/scenes`);
  }

  async fetchPoints(sceneId: string): Promise<ArrayBuffer> {
    const resp = await fetch(`${this.base}/scenes/${sceneId}/points`);
    if (!resp.ok) throw new ApiError(resp.status, resp.statusText);
    return resp.arrayBuffer();
  }

  createSession(sceneId: string, modelId?: string, instanceId?: number): Promise<SessionInfo> {
    return request(`${this.base}/sessions`, {
      method: "POST",
      headers: { "Content-Type": "application/json" },
      body: JSON.stringify({ scene_id: sceneId, model_id: modelId ?? null, instance_id: instanceId ?? null }),
    });
  }

  addClick(sessionId: string, x: number, y: number, z: number, label: ClickLabel): Promise<MaskPayload> {
    return request(`${this.base}/sessions/${sessionId}/clicks`, {
      method: "POST",
      headers: { "Content-Type": "application/json" },
      body: JSON.stringify({ x, y, z, label }),
    });
  }

  undo(sessionId: string): Promise<MaskPayload> {
    return request(`${this.base}/sessions/${sessionId}/undo`, { method: "POST" });
  }

  mask(sessionId: string): Promise<MaskPayload> {
    return request(`${this.base}/sessions/${sessionId}/mask`);
  }

  sessionState(sessionId: string): Promise<MaskPayload> {
    return request(`${this.base}/sessions/${sessionId}`);
  }
}
